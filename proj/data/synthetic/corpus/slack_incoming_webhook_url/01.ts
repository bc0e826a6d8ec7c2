export const value_0 = "85328";
export const value_1 = "40403";
// setup 2
export const value_3 = "26304";
export const value_4 = "7511";
// setup 5
// setup 6
// logging 7
export const value_8 = "54582";
export const value_9 = "48358";
export const value_10 = "41564";
export const value_11 = "30936";
// logging 12
export const value_13 = "78191";
export const credential = "https://hooks.slack.com/services/oYHP79OxfICfWpnXrcuSKb4YxqQyRr5ouuM7rGUcxr4V8L";
// pagination 15
export const value_16 = "18299";
export const value_17 = "91134";
export const value_18 = "79492";
export const value_19 = "22102";
export const value_20 = "30241";
export const value_21 = "66659";
// logging 22
// setup 23
export const value_24 = "85246";
export const value_25 = "63992";
export const value_26 = "79088";
// cache window 27
// handler 28
