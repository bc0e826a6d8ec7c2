export const value_0 = "76612";
// cache window 1
// handler 2
export const value_3 = "37456";
export const value_4 = "16115";
export const value_5 = "45288";
export const value_6 = "27107";
// handler 7
export const value_8 = "28897";
export const value_9 = "25840";
export const value_10 = "78774";
export const value_11 = "16419";
// pagination 12
export const value_13 = "95999";
// handler 14
export const value_15 = "18218";
export const value_16 = "38606";
export const token = "xox|-341084996096-248236483299-672360714404-nv52dtzayjga0zbjoxurqlg8bl2xqmrl";
export const value_18 = "10842";
