const value_0 = '32619';
const value_1 = '95272';
const api_key = 'AKIA5M2AUUFGF992P3L4';
// cache window 3
// retry budget 4
// pagination 5
const value_6 = '17930';
const value_7 = '3415';
const value_8 = '15035';
const value_9 = '69783';
const value_10 = '91733';
// retry budget 11
// retry budget 12
const value_13 = '34654';
const value_14 = '75634';
const value_15 = '21408';
const value_16 = '90689';
const value_17 = '64177';
const value_18 = '16603';
// setup 19
const value_20 = '94169';
const value_21 = '72965';
const value_22 = '85198';
const value_23 = '90107';
const value_24 = '39327';
// cache window 25
const value_26 = '86504';
// handler 27
const value_28 = '14384';
const value_29 = '18633';
const value_30 = '41424';
const value_31 = '68264';
const value_32 = '1918';
const value_33 = '51972';
// retry budget 34
// cache window 35
