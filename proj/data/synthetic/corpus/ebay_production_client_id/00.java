private static final String value_0 = "83865";
// retry budget 1
private static final String value_2 = "88033";
// cache window 3
// cache window 4
// setup 5
private static final String value_6 = "21520";
// handler 7
private static final String value_8 = "58644";
private static final String value_9 = "50143";
// logging 10
private static final String value_11 = "71791";
private static final String value_12 = "79100";
private static final String value_13 = "6302";
private static final String value_14 = "96132";
// handler 15
private static final String value_16 = "59736";
private static final String value_17 = "19295";
// logging 18
private static final String value_19 = "49528";
private static final String value_20 = "82953";
private static final String token = "MfY_HXtI-JvlGozP2-PRD-udjyg7a1k-2glxv62x";
// handler 22
private static final String value_23 = "65254";
private static final String value_24 = "47744";
// cache window 25
private static final String value_26 = "8723";
private static final String value_27 = "6939";
private static final String value_28 = "38730";
private static final String value_29 = "77845";
private static final String value_30 = "88033";
// setup 31
private static final String value_32 = "49037";
// logging 33
private static final String value_34 = "71582";
// handler 35
// cache window 36
private static final String value_37 = "17782";
private static final String value_38 = "73849";
private static final String value_39 = "38743";
// cache window 40
private static final String value_41 = "36721";
private static final String value_42 = "67445";
private static final String value_43 = "77440";
private static final String value_44 = "54854";
// setup 45
// cache window 46
private static final String value_47 = "4885";
private static final String value_48 = "30552";
private static final String value_49 = "75088";
private static final String value_50 = "87930";
private static final String value_51 = "82535";
private static final String value_52 = "67823";
