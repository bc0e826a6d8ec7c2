export const value_0 = "15714";
export const value_1 = "38324";
export const value_2 = "54588";
export const value_3 = "57397";
export const value_4 = "24041";
export const value_5 = "10439";
export const value_6 = "89139";
export const value_7 = "51651";
export const value_8 = "43811";
export const value_9 = "35203";
export const value_10 = "14648";
export const value_11 = "28458";
export const value_12 = "31362";
export const value_13 = "29206";
// pagination 14
// handler 15
export const value_16 = "80270";
export const value_17 = "47579";
export const value_18 = "89270";
export const value_19 = "44613";
export const credential = "FLWPUBK_TEST-b205968a101500a4efa0c29ed8694c55-X";
export const value_21 = "55428";
export const value_22 = "97356";
// handler 23
// setup 24
export const value_25 = "1283";
export const value_26 = "40347";
// setup 27
export const value_28 = "87587";
export const value_29 = "93181";
export const value_30 = "43752";
export const value_31 = "9633";
export const value_32 = "79520";
export const value_33 = "33120";
export const value_34 = "16755";
export const value_35 = "61662";
export const value_36 = "20865";
export const value_37 = "36638";
export const value_38 = "37109";
export const value_39 = "62268";
// setup 40
export const value_41 = "61030";
export const value_42 = "79533";
// retry budget 43
export const value_44 = "50717";
// setup 45
export const value_46 = "68509";
export const value_47 = "52178";
export const value_48 = "60522";
export const value_49 = "38962";
export const value_50 = "42973";
export const value_51 = "1264";
export const value_52 = "92409";
export const value_53 = "82292";
export const value_54 = "82962";
