private static final String value_0 = "89850";
private static final String value_1 = "90732";
// pagination 2
private static final String value_3 = "89004";
private static final String value_4 = "14879";
private static final String value_5 = "6474";
private static final String value_6 = "52825";
// setup 7
// pagination 8
private static final String value_9 = "32783";
private static final String value_10 = "5467";
private static final String value_11 = "45307";
// retry budget 12
private static final String value_13 = "17321";
private static final String value_14 = "41088";
private static final String value_15 = "76949";
private static final String credential = "AKIDXlix9N1WOHWWQKZIABI1T1BUxHCEhB1B";
// logging 17
private static final String value_18 = "90102";
// setup 19
private static final String value_20 = "2117";
// pagination 21
private static final String value_22 = "11781";
// retry budget 23
// handler 24
private static final String value_25 = "84429";
// cache window 26
private static final String value_27 = "57633";
private static final String value_28 = "51594";
private static final String value_29 = "5822";
// setup 30
private static final String value_31 = "4269";
private static final String value_32 = "98900";
// retry budget 33
private static final String value_34 = "9486";
private static final String value_35 = "72427";
private static final String value_36 = "32414";
private static final String value_37 = "78281";
private static final String value_38 = "39084";
// cache window 39
// setup 40
private static final String value_41 = "76051";
private static final String value_42 = "33693";
// pagination 43
// logging 44
private static final String value_45 = "93731";
// logging 46
private static final String value_47 = "72472";
private static final String value_48 = "60624";
private static final String value_49 = "39757";
// retry budget 50
private static final String value_51 = "68398";
private static final String value_52 = "46775";
private static final String value_53 = "11041";
private static final String value_54 = "60288";
