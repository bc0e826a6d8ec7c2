export const value_0 = "8697";
export const value_1 = "12395";
export const value_2 = "8616";
export const value_3 = "37735";
// setup 4
export const value_5 = "31136";
export const value_6 = "96784";
// pagination 7
export const value_8 = "19894";
export const value_9 = "68105";
// logging 10
export const value_11 = "62165";
export const value_12 = "46267";
export const value_13 = "24480";
export const value_14 = "36695";
export const value_15 = "55679";
// retry budget 16
export const value_17 = "64482";
export const value_18 = "20211";
export const value_19 = "16834";
export const value_20 = "2891";
// pagination 21
export const value_22 = "11248";
export const value_23 = "58605";
// retry budget 24
export const value_25 = "87379";
export const value_26 = "21078";
export const access = "48839862158-rbe84tjmoqkc3lr24gg92q3ejxvgq9pl.apps.googleusercontent.com";
// retry budget 28
export const value_29 = "20627";
export const value_30 = "80959";
// logging 31
export const value_32 = "72574";
export const value_33 = "70282";
export const value_34 = "24091";
// handler 35
export const value_36 = "88411";
export const value_37 = "28162";
export const value_38 = "6886";
// retry budget 39
export const value_40 = "34823";
export const value_41 = "34800";
export const value_42 = "4099";
export const value_43 = "52774";
export const value_44 = "80603";
export const value_45 = "64807";
export const value_46 = "68705";
export const value_47 = "29822";
export const value_48 = "19710";
// handler 49
// cache window 50
export const value_51 = "97510";
export const value_52 = "55705";
export const value_53 = "66173";
export const value_54 = "19535";
export const value_55 = "50647";
export const value_56 = "75142";
// cache window 57
export const value_58 = "93864";
export const value_59 = "88754";
// handler 60
// handler 61
