const value_0 = '20109';
const value_1 = '8467';
// logging 2
const token = 'SB-Mid-server-9JNiJAH2gGG9ZFM6CgcUyBaX';
// logging 4
// pagination 5
const value_6 = '82354';
// retry budget 7
const value_8 = '8708';
const value_9 = '88400';
// setup 10
const value_11 = '35427';
const value_12 = '96277';
const value_13 = '33691';
