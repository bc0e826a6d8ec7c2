private static final String value_0 = "1396";
private static final String value_1 = "14297";
private static final String client_secret = "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";
private static final String value_3 = "30959";
private static final String value_4 = "24125";
private static final String value_5 = "89303";
private static final String value_6 = "93351";
// logging 7
private static final String value_8 = "47783";
private static final String value_9 = "79076";
// cache window 10
// setup 11
private static final String value_12 = "67322";
// pagination 13
// pagination 14
private static final String value_15 = "24617";
private static final String value_16 = "3530";
private static final String value_17 = "77092";
private static final String value_18 = "80764";
private static final String value_19 = "8285";
// setup 20
private static final String value_21 = "63774";
private static final String value_22 = "72800";
