export const value_0 = "26987";
// logging 1
// logging 2
export const value_3 = "84962";
// retry budget 4
export const value_5 = "68284";
export const value_6 = "95427";
export const credential = "LTAIAnGeYY0Z1GaWcmnRRlPW";
export const backup_key = "FLWSECK_TEST-cd4c8391f4db636c11cf804eaf46e71f-X";
// setup 8
