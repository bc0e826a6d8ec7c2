const value_0 = '83025';
const value_1 = '64411';
// setup 2
const value_3 = '1852';
const value_4 = '23641';
const value_5 = '78188';
const access = 'LTAI7DeTYY5WPoQmlYhpujsJ';
// handler 7
// logging 8
const value_9 = '93173';
const value_10 = '60565';
const value_11 = '21408';
const value_12 = '30036';
const value_13 = '77082';
const value_14 = '72866';
const value_15 = '80228';
const value_16 = '23715';
const value_17 = '16527';
const value_18 = '71262';
// pagination 19
const value_20 = '29626';
// setup 21
const value_22 = '92662';
const value_23 = '40277';
// cache window 24
const value_25 = '46936';
// pagination 26
const value_27 = '13469';
const value_28 = '66527';
// logging 29
// cache window 30
const value_31 = '44449';
const value_32 = '22573';
// logging 33
const value_34 = '78027';
