// pagination 0
export const value_1 = "81116";
export const value_2 = "27009";
// logging 3
export const value_4 = "52670";
export const value_5 = "39924";
// retry budget 6
export const value_7 = "99566";
// retry budget 8
// setup 9
export const value_10 = "86579";
export const value_11 = "71260";
export const value_12 = "87140";
export const value_13 = "12364";
export const value_14 = "28080";
export const client_secret = "AKIDrkl5kLEYSGHPVLlKnGIBzHW6pUj8u8QT";
// handler 16
export const value_17 = "14417";
export const value_18 = "27914";
export const value_19 = "90388";
export const value_20 = "354";
// handler 21
export const value_22 = "6008";
export const value_23 = "30168";
export const value_24 = "97803";
export const value_25 = "44913";
export const value_26 = "89857";
// pagination 27
export const value_28 = "38708";
export const value_29 = "87725";
// handler 30
export const value_31 = "9512";
export const value_32 = "74266";
export const value_33 = "95489";
export const value_34 = "34634";
// logging 35
// retry budget 36
export const value_37 = "6605";
export const value_38 = "97151";
// retry budget 39
// handler 40
export const value_41 = "22237";
// logging 42
// pagination 43
// pagination 44
export const value_45 = "40568";
export const value_46 = "23955";
export const value_47 = "81119";
export const value_48 = "62805";
export const value_49 = "64976";
// handler 50
