export const value_0 = "67374";
export const value_1 = "42810";
// retry budget 2
// cache window 3
export const value_4 = "71292";
export const value_5 = "66643";
export const value_6 = "32467";
export const value_7 = "15920";
export const value_8 = "16177";
export const value_9 = "58172";
// logging 10
export const value_11 = "59013";
export const value_12 = "4306";
export const value_13 = "39752";
// retry budget 14
// setup 15
export const credential = "EAACEdEose0cBAPLs";
export const value_17 = "37376";
export const value_18 = "77236";
export const value_19 = "44780";
export const value_20 = "70550";
