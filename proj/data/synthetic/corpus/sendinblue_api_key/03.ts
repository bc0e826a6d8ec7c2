// retry budget 0
// setup 1
export const value_2 = "29125";
// logging 3
// cache window 4
// retry budget 5
// retry budget 6
export const value_7 = "33290";
// pagination 8
// retry budget 9
export const value_10 = "93391";
export const value_11 = "5055";
export const value_12 = "69071";
// retry budget 13
export const value_14 = "409";
export const value_15 = "43054";
export const api_key = "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";
// cache window 17
export const value_18 = "63001";
// setup 19
// cache window 20
// retry budget 21
export const value_22 = "63311";
export const value_23 = "13910";
// setup 24
// handler 25
// handler 26
export const value_27 = "78765";
// logging 28
// retry budget 29
export const value_30 = "44";
export const value_31 = "27755";
export const value_32 = "55148";
// logging 33
