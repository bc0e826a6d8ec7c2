// setup 0
const value_1 = '7897';
const value_2 = '20519';
// handler 3
const value_4 = '16037';
const value_5 = '81618';
// setup 6
const value_7 = '99452';
const value_8 = '2741';
const access = 'xox|-177825786266-486475400325-611817254448-or498ws81yqin3wbn7axvzsfoq6bh816';
// handler 10
// setup 11
const value_12 = '72887';
const value_13 = '45477';
// handler 14
const value_15 = '34208';
const value_16 = '5165';
const value_17 = '7073';
const value_18 = '19553';
// logging 19
// cache window 20
// logging 21
const value_22 = '27863';
const value_23 = '59202';
// handler 24
const value_25 = '52294';
const value_26 = '82442';
// cache window 27
const value_28 = '16862';
// pagination 29
const value_30 = '49833';
const value_31 = '39222';
// setup 32
const value_33 = '86904';
// logging 34
const value_35 = '38132';
const value_36 = '49693';
const value_37 = '10128';
