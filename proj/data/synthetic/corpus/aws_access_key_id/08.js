const value_0 = '10394';
const value_1 = '98883';
// cache window 2
const value_3 = '3614';
const value_4 = '96129';
const value_5 = '48482';
const token = 'AKIA9Q1X5ORWATFCJAKB';
// setup 7
const value_8 = '98907';
const value_9 = '53217';
const value_10 = '68064';
const value_11 = '93234';
const value_12 = '51514';
// handler 13
