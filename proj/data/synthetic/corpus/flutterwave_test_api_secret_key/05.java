private static final String value_0 = "89289";
private static final String value_1 = "35547";
private static final String value_2 = "36679";
private static final String value_3 = "66579";
// setup 4
private static final String value_5 = "96548";
private static final String value_6 = "14123";
// retry budget 7
private static final String value_8 = "23529";
// logging 9
private static final String value_10 = "48847";
private static final String value_11 = "19559";
private static final String value_12 = "94539";
private static final String value_13 = "16993";
private static final String value_14 = "3728";
private static final String value_15 = "44409";
private static final String value_16 = "39828";
// pagination 17
private static final String value_18 = "8941";
private static final String value_19 = "26800";
// pagination 20
private static final String value_21 = "63821";
private static final String value_22 = "24178";
private static final String credential = "FLWSECK_TEST-b68f80ab073d088e710b5b316a402b38-X";
private static final String value_24 = "76538";
// handler 25
// retry budget 26
private static final String value_27 = "9050";
private static final String value_28 = "38371";
// setup 29
private static final String value_30 = "18832";
private static final String value_31 = "20246";
private static final String value_32 = "62960";
// setup 33
// pagination 34
// cache window 35
