export const value_0 = "92421";
// setup 1
export const value_2 = "13332";
// retry budget 3
// handler 4
// handler 5
export const value_6 = "2416";
export const value_7 = "32542";
export const value_8 = "28794";
// handler 9
export const value_10 = "83984";
// handler 11
export const value_12 = "50338";
// logging 13
// setup 14
export const value_15 = "47549";
export const value_16 = "35996";
export const value_17 = "30429";
// handler 18
// retry budget 19
export const value_20 = "71564";
export const credential = "FLWSECK_TEST-be97880c3835c9494578e95ef34a8863-X";
// pagination 22
export const value_23 = "99452";
export const value_24 = "2248";
