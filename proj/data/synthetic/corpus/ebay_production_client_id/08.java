private static final String value_0 = "10138";
private static final String value_1 = "39773";
private static final String value_2 = "47276";
private static final String value_3 = "46730";
private static final String value_4 = "74145";
private static final String value_5 = "95561";
private static final String value_6 = "58841";
private static final String value_7 = "76087";
private static final String value_8 = "31693";
// cache window 9
private static final String auth = "RsPBRXNK-RhnGn6Wj-PRD-b3eqrvsam-q2hw84zq";
private static final String value_11 = "32430";
private static final String value_12 = "95113";
private static final String value_13 = "24196";
// cache window 14
// cache window 15
private static final String value_16 = "71525";
private static final String value_17 = "85119";
private static final String value_18 = "47693";
// setup 19
// logging 20
private static final String value_21 = "33111";
private static final String value_22 = "70159";
private static final String value_23 = "34666";
private static final String value_24 = "86545";
private static final String value_25 = "34046";
private static final String value_26 = "95956";
private static final String value_27 = "17683";
private static final String value_28 = "68190";
// handler 29
private static final String value_30 = "30461";
private static final String value_31 = "96996";
private static final String value_32 = "83926";
// logging 33
private static final String value_34 = "55402";
private static final String value_35 = "48814";
private static final String value_36 = "56721";
private static final String value_37 = "84762";
// logging 38
private static final String value_39 = "36386";
private static final String value_40 = "65913";
private static final String value_41 = "48409";
