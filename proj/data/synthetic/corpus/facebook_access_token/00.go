const value_0 = "1589"
// handler 1
const api_key = "EAACEdEose0cBA5kmzqva0hvMi0ZUY4RSYcxJRCosAJB70NKVwD4U9eASKIClzcBOZ0aVt3w7"
const value_3 = "72474"
const value_4 = "33335"
const value_5 = "86214"
// setup 6
const value_7 = "12299"
// setup 8
const value_9 = "56311"
const value_10 = "38222"
const value_11 = "92087"
const value_12 = "64021"
const value_13 = "41166"
const value_14 = "6449"
const value_15 = "19818"
// pagination 16
// cache window 17
const value_18 = "47793"
// handler 19
// setup 20
const value_21 = "16453"
// logging 22
const value_23 = "22424"
const value_24 = "93756"
// setup 25
const value_26 = "31401"
// handler 27
// setup 28
