private static final String value_0 = "15948";
private static final String value_1 = "46655";
private static final String value_2 = "62072";
// setup 3
// pagination 4
private static final String value_5 = "81801";
private static final String value_6 = "78257";
// retry budget 7
private static final String value_8 = "9745";
// logging 9
private static final String value_10 = "12793";
private static final String value_11 = "33695";
private static final String value_12 = "43337";
// logging 13
private static final String value_14 = "27055";
private static final String value_15 = "37385";
// pagination 16
private static final String value_17 = "99263";
// retry budget 18
// retry budget 19
// handler 20
// pagination 21
// setup 22
private static final String value_23 = "22307";
private static final String credential = "FLWPUBK_TEST-37749e8f7cfd3d1a95eb2d4ac3aa1b45-X";
private static final String value_25 = "74704";
private static final String value_26 = "22327";
private static final String value_27 = "12246";
private static final String value_28 = "14087";
private static final String value_29 = "9889";
private static final String value_30 = "52280";
// logging 31
private static final String value_32 = "42011";
private static final String value_33 = "81794";
private static final String value_34 = "23466";
private static final String value_35 = "8237";
private static final String value_36 = "74682";
// cache window 37
private static final String value_38 = "73160";
// setup 39
// pagination 40
private static final String value_41 = "14073";
private static final String value_42 = "54508";
// setup 43
// handler 44
// pagination 45
// cache window 46
// handler 47
private static final String value_48 = "44481";
private static final String value_49 = "36743";
// handler 50
private static final String value_51 = "21367";
// setup 52
// cache window 53
private static final String value_54 = "24618";
private static final String value_55 = "62756";
private static final String value_56 = "59405";
// pagination 57
// cache window 58
// pagination 59
private static final String value_60 = "51976";
// handler 61
private static final String value_62 = "18363";
