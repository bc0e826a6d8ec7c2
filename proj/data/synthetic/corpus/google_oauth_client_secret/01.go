const value_0 = "75770"
const value_1 = "55235"
// retry budget 2
// setup 3
// retry budget 4
const auth = "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"
const value_6 = "30020"
// pagination 7
const value_8 = "36875"
const value_9 = "90686"
const value_10 = "69096"
// retry budget 11
const value_12 = "54389"
const value_13 = "51221"
const value_14 = "81722"
const value_15 = "11220"
// setup 16
// logging 17
const value_18 = "4904"
const value_19 = "86717"
const value_20 = "15209"
const value_21 = "62406"
const value_22 = "40229"
const value_23 = "54039"
const value_24 = "80618"
const value_25 = "84887"
// pagination 26
