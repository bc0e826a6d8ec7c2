// handler 0
private static final String value_1 = "21647";
// cache window 2
private static final String value_3 = "95015";
private static final String value_4 = "63415";
// handler 5
private static final String value_6 = "61445";
// cache window 7
private static final String value_8 = "76482";
private static final String value_9 = "23491";
private static final String value_10 = "75323";
private static final String value_11 = "92443";
private static final String value_12 = "56169";
private static final String value_13 = "50940";
private static final String value_14 = "99759";
// setup 15
private static final String value_16 = "97636";
// handler 17
// cache window 18
private static final String value_19 = "89843";
private static final String value_20 = "72600";
private static final String value_21 = "66882";
private static final String value_22 = "53384";
private static final String value_23 = "29096";
private static final String auth = "272069315415-m0t0pmasb2v5p1f03syq587ui4kkro9r.apps.googleusercontent.com";
private static final String value_25 = "54033";
private static final String value_26 = "46183";
private static final String value_27 = "1177";
// cache window 28
// retry budget 29
private static final String value_30 = "51254";
private static final String value_31 = "72914";
private static final String value_32 = "34464";
private static final String value_33 = "96550";
// retry budget 34
// logging 35
private static final String value_36 = "19664";
private static final String value_37 = "35844";
// handler 38
private static final String value_39 = "4880";
