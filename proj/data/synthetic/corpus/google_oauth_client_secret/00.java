private static final String value_0 = "69976";
private static final String value_1 = "72320";
private static final String value_2 = "35447";
private static final String value_3 = "9728";
private static final String value_4 = "18495";
private static final String value_5 = "29695";
private static final String value_6 = "91047";
private static final String value_7 = "66258";
private static final String value_8 = "87442";
// logging 9
// pagination 10
private static final String value_11 = "51652";
private static final String value_12 = "73630";
private static final String value_13 = "41297";
// setup 14
private static final String value_15 = "54794";
// pagination 16
private static final String value_17 = "15903";
// setup 18
private static final String token = "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";
private static final String value_20 = "97435";
// cache window 21
private static final String value_22 = "67110";
private static final String value_23 = "80281";
// pagination 24
// pagination 25
// pagination 26
private static final String value_27 = "37666";
private static final String value_28 = "98509";
private static final String value_29 = "67259";
private static final String value_30 = "48082";
// cache window 31
private static final String value_32 = "64735";
private static final String value_33 = "88775";
private static final String value_34 = "51769";
// setup 35
private static final String value_36 = "8741";
private static final String value_37 = "77155";
private static final String value_38 = "72805";
