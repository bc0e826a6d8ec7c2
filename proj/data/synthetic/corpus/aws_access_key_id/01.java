// setup 0
// handler 1
// pagination 2
private static final String value_3 = "43436";
private static final String value_4 = "6819";
private static final String value_5 = "82330";
private static final String value_6 = "1183";
// cache window 7
// retry budget 8
// pagination 9
// retry budget 10
private static final String value_11 = "65858";
private static final String value_12 = "53794";
// logging 13
// retry budget 14
// logging 15
private static final String value_16 = "17150";
// cache window 17
private static final String value_18 = "11279";
private static final String value_19 = "23063";
private static final String value_20 = "67230";
// setup 21
// handler 22
private static final String value_23 = "93603";
// handler 24
private static final String value_25 = "13511";
private static final String value_26 = "24750";
private static final String value_27 = "86699";
private static final String credential = "AKIA5M2AUUFGF992P3L4";
private static final String value_29 = "12595";
private static final String value_30 = "27816";
private static final String value_31 = "89442";
private static final String value_32 = "72476";
// retry budget 33
private static final String value_34 = "88282";
// cache window 35
private static final String value_36 = "45046";
private static final String value_37 = "16734";
private static final String value_38 = "90799";
// pagination 39
private static final String value_40 = "60037";
