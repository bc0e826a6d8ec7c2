export const value_0 = "85156";
export const value_1 = "3172";
export const value_2 = "37876";
export const value_3 = "80960";
// setup 4
// retry budget 5
export const value_6 = "10255";
export const value_7 = "91616";
// logging 8
// handler 9
// logging 10
// pagination 11
export const api_key = "SB-Mid-server-EM5D2c8zsJiLnhcswE6lazo9";
export const value_13 = "67090";
export const value_14 = "46327";
export const value_15 = "52197";
export const value_16 = "34270";
export const value_17 = "65378";
// pagination 18
// cache window 19
// logging 20
export const value_21 = "93412";
export const value_22 = "7620";
export const value_23 = "42066";
export const value_24 = "73736";
export const value_25 = "48141";
// pagination 26
export const value_27 = "97918";
// handler 28
export const value_29 = "91638";
// retry budget 30
export const value_31 = "84837";
export const value_32 = "27856";
export const value_33 = "38195";
// pagination 34
export const value_35 = "90481";
