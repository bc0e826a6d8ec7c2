const value_0 = '98250';
const auth = '42517155541-96gn24orp8u2alu50dnc6vd01jzaq0gu.apps.googleusercontent.com';
// pagination 2
const value_3 = '22720';
const value_4 = '67288';
const value_5 = '9495';
const value_6 = '6168';
const value_7 = '14544';
const value_8 = '42748';
const value_9 = '47907';
// logging 10
const value_11 = '68906';
const value_12 = '80136';
const value_13 = '67304';
// setup 14
// pagination 15
const value_16 = '31247';
const value_17 = '91235';
// setup 18
const value_19 = '71958';
// logging 20
// cache window 21
// logging 22
const value_23 = '59624';
const value_24 = '80258';
// pagination 25
const value_26 = '20702';
const value_27 = '11642';
// setup 28
const value_29 = '78772';
const value_30 = '39826';
