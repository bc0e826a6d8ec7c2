private static final String value_0 = "34939";
private static final String value_1 = "6185";
private static final String value_2 = "87830";
private static final String value_3 = "62638";
private static final String value_4 = "84105";
// handler 5
// logging 6
private static final String token = "sk_test_5PRpyRLkxNwlg02hUKWudpa6";
// logging 8
// setup 9
private static final String value_10 = "68071";
private static final String value_11 = "55191";
// retry budget 12
// pagination 13
// logging 14
private static final String value_15 = "75074";
private static final String value_16 = "72545";
private static final String value_17 = "37727";
private static final String value_18 = "69649";
// cache window 19
private static final String value_20 = "50961";
private static final String value_21 = "34455";
private static final String value_22 = "86154";
private static final String value_23 = "22245";
private static final String value_24 = "24995";
private static final String value_25 = "31874";
// pagination 26
private static final String value_27 = "9056";
// cache window 28
