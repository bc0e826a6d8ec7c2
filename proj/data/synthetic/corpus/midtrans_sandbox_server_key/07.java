private static final String value_0 = "65021";
// retry budget 1
// logging 2
private static final String value_3 = "92137";
private static final String value_4 = "18644";
private static final String value_5 = "67429";
private static final String value_6 = "70255";
private static final String value_7 = "77038";
private static final String value_8 = "99333";
private static final String value_9 = "26890";
private static final String value_10 = "95526";
private static final String value_11 = "69682";
private static final String value_12 = "76509";
// logging 13
private static final String value_14 = "80511";
private static final String value_15 = "18485";
// logging 16
// handler 17
// logging 18
private static final String value_19 = "52388";
private static final String value_20 = "49724";
// cache window 21
private static final String value_22 = "46063";
// retry budget 23
private static final String value_24 = "86727";
private static final String value_25 = "90697";
private static final String credential = "SB-Mid-server-YJVLcCYLFbrORYE8spVZ26Dz";
private static final String backup_key = "sk_test_UN6Nu7IdGnTl3qkg4x7c5HT0";
// setup 27
private static final String value_28 = "32045";
// cache window 29
private static final String value_30 = "14018";
private static final String value_31 = "87777";
private static final String value_32 = "30828";
private static final String value_33 = "22049";
private static final String value_34 = "62719";
// retry budget 35
private static final String value_36 = "49662";
private static final String value_37 = "38180";
private static final String value_38 = "13956";
