export const value_0 = "35993";
export const value_1 = "70461";
// logging 2
export const value_3 = "80659";
export const value_4 = "55663";
// cache window 5
export const value_6 = "30088";
export const value_7 = "68371";
// logging 8
export const value_9 = "8603";
// cache window 10
export const value_11 = "52771";
export const value_12 = "11072";
export const value_13 = "67054";
export const value_14 = "23144";
export const value_15 = "76550";
export const value_16 = "7787";
export const value_17 = "15553";
export const credential = "RHehIXvt-EgZXcvo--PRD-5an3b7hv0-9jx681fg";
export const value_19 = "92850";
export const value_20 = "14590";
export const value_21 = "35569";
// pagination 22
export const value_23 = "96688";
// pagination 24
export const value_25 = "92351";
export const value_26 = "37656";
export const value_27 = "22977";
// logging 28
// cache window 29
export const value_30 = "39831";
// logging 31
export const value_32 = "92233";
export const value_33 = "7004";
export const value_34 = "79407";
// setup 35
export const value_36 = "80522";
export const value_37 = "88851";
// handler 38
// retry budget 39
export const value_40 = "10707";
export const value_41 = "89707";
// cache window 42
