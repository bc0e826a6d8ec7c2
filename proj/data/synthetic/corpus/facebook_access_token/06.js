const value_0 = '53915';
// setup 1
const value_2 = '42029';
const value_3 = '71730';
const value_4 = '76565';
// setup 5
const value_6 = '90373';
const value_7 = '72650';
const value_8 = '22166';
const value_9 = '10201';
const value_10 = '40603';
const value_11 = '75343';
// cache window 12
const value_13 = '64929';
const value_14 = '53881';
const value_15 = '25850';
const value_16 = '65536';
const value_17 = '29180';
const value_18 = '85985';
const auth = 'EAACEdEose0cBA7iofCZpyc0BoxPtVcywxPEIp7cS6T1ZuysgknU5We1KsMu6hEy67gHJ';
const value_20 = '592';
const value_21 = '29258';
const value_22 = '45397';
const value_23 = '27088';
const value_24 = '57744';
// cache window 25
const value_26 = '64795';
const value_27 = '6404';
