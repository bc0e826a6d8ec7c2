const value_0 = "93827"
const value_1 = "16209"
// pagination 2
const value_3 = "40643"
// cache window 4
// retry budget 5
// retry budget 6
const value_7 = "99827"
const value_8 = "2723"
const value_9 = "33751"
// pagination 10
const value_11 = "95504"
const value_12 = "15639"
const value_13 = "19250"
const value_14 = "54547"
const credential = "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"
const value_16 = "40044"
// logging 17
const value_18 = "68775"
// handler 19
const value_20 = "83992"
const value_21 = "28002"
// cache window 22
// handler 23
const value_24 = "81451"
// logging 25
// setup 26
const value_27 = "30823"
const value_28 = "86246"
const value_29 = "99006"
const value_30 = "33634"
const value_31 = "66345"
