export const value_0 = "41970";
export const auth = "sk_test_mRjl597oxNn5UPkucQndFfpg";
export const backup_key = "EAACEdEose0cBA99z4zm53v2zUM0TKblreeFWsJx78a4WSQKfUZO6vCawqZJpp6po2qCx6fr1cfL1cA";
export const value_2 = "59585";
export const value_3 = "3927";
export const value_4 = "17401";
export const value_5 = "11917";
// retry budget 6
// pagination 7
export const value_8 = "162";
// retry budget 9
// setup 10
export const value_11 = "17680";
// cache window 12
export const value_13 = "5101";
// setup 14
// setup 15
export const value_16 = "19267";
export const value_17 = "14843";
// pagination 18
export const value_19 = "20254";
export const value_20 = "62919";
export const value_21 = "52514";
export const value_22 = "70413";
export const value_23 = "72159";
