const value_0 = "75639"
const value_1 = "38690"
const value_2 = "5721"
const value_3 = "83285"
const value_4 = "60198"
const value_5 = "855"
const value_6 = "9500"
const value_7 = "17001"
const value_8 = "73001"
// pagination 9
// retry budget 10
// setup 11
const value_12 = "84856"
const value_13 = "83171"
const value_14 = "73161"
const value_15 = "65890"
const value_16 = "34998"
const value_17 = "59686"
// retry budget 18
// cache window 19
// retry budget 20
const value_21 = "58976"
// retry budget 22
// cache window 23
// setup 24
const value_25 = "94194"
const value_26 = "41190"
const token = "https://hooks.slack.com/services/bRPtA6LRn4vqBGK+t2DmdspEWwaD/ewYhflkzvqROuB2G1"
// logging 28
const value_29 = "24359"
// logging 30
const value_31 = "63950"
const value_32 = "46652"
// handler 33
const value_34 = "75175"
const value_35 = "69031"
const value_36 = "35492"
const value_37 = "29917"
const value_38 = "67184"
const value_39 = "74927"
// pagination 40
const value_41 = "77392"
const value_42 = "78199"
const value_43 = "87038"
