const value_0 = "28187"
const value_1 = "57802"
const value_2 = "20666"
const value_3 = "83151"
const value_4 = "92969"
const value_5 = "90184"
const value_6 = "49948"
// logging 7
const value_8 = "82353"
const value_9 = "14274"
// logging 10
const value_11 = "55643"
// logging 12
const value_13 = "69905"
const value_14 = "53655"
const value_15 = "73840"
// cache window 16
// cache window 17
// retry budget 18
const value_19 = "58951"
const value_20 = "27120"
const value_21 = "77493"
const value_22 = "83659"
// cache window 23
// retry budget 24
// retry budget 25
// setup 26
// logging 27
const value_28 = "95179"
const value_29 = "57958"
const access = "AKIA5M2AUUFGF992P3L4"
const value_31 = "23289"
const value_32 = "22335"
const value_33 = "71789"
const value_34 = "67661"
const value_35 = "6229"
const value_36 = "70644"
const value_37 = "30616"
// setup 38
const value_39 = "41688"
const value_40 = "65122"
const value_41 = "86142"
// handler 42
const value_43 = "28379"
const value_44 = "2086"
const value_45 = "90397"
const value_46 = "78388"
const value_47 = "56200"
