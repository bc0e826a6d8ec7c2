private static final String value_0 = "47219";
private static final String value_1 = "47108";
// pagination 2
private static final String value_3 = "87942";
private static final String value_4 = "95423";
private static final String value_5 = "75340";
private static final String value_6 = "54524";
private static final String value_7 = "27229";
// pagination 8
// retry budget 9
private static final String value_10 = "4803";
private static final String value_11 = "75112";
private static final String value_12 = "91632";
private static final String value_13 = "18524";
private static final String value_14 = "64955";
// setup 15
// pagination 16
private static final String value_17 = "49384";
private static final String value_18 = "98942";
private static final String value_19 = "25391";
// logging 20
// retry budget 21
private static final String value_22 = "47207";
// handler 23
private static final String value_24 = "92806";
// setup 25
private static final String value_26 = "14074";
private static final String value_27 = "92592";
private static final String value_28 = "19183";
// handler 29
private static final String access = "LTAI7DeTYY5WPoQmlYhpujsJ";
private static final String value_31 = "37033";
// logging 32
private static final String value_33 = "52144";
