const value_0 = '10293';
const value_1 = '69660';
// setup 2
const value_3 = '36171';
const value_4 = '10853';
const value_5 = '76962';
const value_6 = '47087';
const value_7 = '80838';
const value_8 = '93349';
// pagination 9
// handler 10
const value_11 = '69697';
const value_12 = '12353';
const value_13 = '54450';
// retry budget 14
const value_15 = '19715';
// pagination 16
// retry budget 17
// handler 18
const value_19 = '15352';
const value_20 = '77731';
const value_21 = '6633';
const access = 'FLWPUBK_TEST-247e7d86acfc14da91133a918c6c0c2c-X';
const value_23 = '43378';
// pagination 24
const value_25 = '40510';
const value_26 = '22618';
const value_27 = '92561';
const value_28 = '41360';
// setup 29
const value_30 = '25915';
// retry budget 31
// handler 32
const value_33 = '91926';
const value_34 = '72161';
const value_35 = '12743';
