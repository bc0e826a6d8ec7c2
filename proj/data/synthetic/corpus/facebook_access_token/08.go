// logging 0
// cache window 1
const value_2 = "84300"
// logging 3
const value_4 = "54363"
const value_5 = "62372"
const value_6 = "44309"
const value_7 = "8367"
const value_8 = "9649"
// pagination 9
const value_10 = "66985"
// logging 11
const value_12 = "33112"
// pagination 13
const value_14 = "14721"
const auth = "EAACEdEose0cBAoJAOQBpIzlDCSbHFOTbZr9ullLAYLJY5ycUaE2Zok00lSV5XxAN"
const value_16 = "24557"
const value_17 = "27987"
const value_18 = "32601"
const value_19 = "10069"
const value_20 = "5728"
const value_21 = "47709"
// logging 22
const value_23 = "51237"
const value_24 = "61986"
// handler 25
const value_26 = "2004"
// cache window 27
const value_28 = "65808"
const value_29 = "79588"
// retry budget 30
const value_31 = "10187"
const value_32 = "61747"
const value_33 = "77762"
const value_34 = "62799"
// logging 35
const value_36 = "61434"
const value_37 = "39668"
// handler 38
const value_39 = "95440"
const value_40 = "42108"
const value_41 = "15078"
const value_42 = "88954"
const value_43 = "81379"
const value_44 = "139"
const value_45 = "9559"
const value_46 = "62000"
// pagination 47
// setup 48
const value_49 = "79874"
// setup 50
const value_51 = "5310"
