export const value_0 = "86120";
export const value_1 = "69771";
// pagination 2
export const value_3 = "62350";
// handler 4
// cache window 5
// cache window 6
// handler 7
// cache window 8
export const value_9 = "44608";
// pagination 10
export const value_11 = "47768";
export const value_12 = "77328";
export const value_13 = "84970";
// logging 14
export const value_15 = "90989";
export const value_16 = "56228";
export const value_17 = "70476";
export const value_18 = "82179";
// pagination 19
export const value_20 = "95777";
export const value_21 = "33864";
// setup 22
export const value_23 = "96083";
export const value_24 = "54361";
export const value_25 = "662";
export const value_26 = "91770";
export const value_27 = "93013";
export const value_28 = "77334";
export const value_29 = "94160";
export const auth = "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";
// setup 31
// logging 32
export const value_33 = "1979";
export const value_34 = "1938";
export const value_35 = "81645";
// cache window 36
// setup 37
export const value_38 = "15295";
// setup 39
// handler 40
export const value_41 = "163";
export const value_42 = "84431";
export const value_43 = "88815";
// retry budget 44
export const value_45 = "87818";
// retry budget 46
export const value_47 = "79381";
// retry budget 48
// handler 49
export const value_50 = "90313";
export const value_51 = "23035";
export const value_52 = "76252";
// retry budget 53
export const value_54 = "41723";
export const value_55 = "56900";
export const value_56 = "63424";
export const value_57 = "37891";
export const value_58 = "89932";
export const value_59 = "49872";
export const value_60 = "73463";
export const value_61 = "36777";
// cache window 62
// pagination 63
export const value_64 = "56465";
