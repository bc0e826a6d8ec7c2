const value_0 = '95012';
// setup 1
const value_2 = '15677';
const value_3 = '253';
// cache window 4
const value_5 = '88091';
const value_6 = '275';
const value_7 = '14629';
const value_8 = '33570';
const value_9 = '37931';
const value_10 = '45175';
const value_11 = '48160';
const value_12 = '76165';
const value_13 = '52200';
const value_14 = '64042';
const value_15 = '43118';
const value_16 = '2599';
// setup 17
// cache window 18
// pagination 19
const api_key = 'AKIDEqhwVNDuYXrkBjek9y2zjpApPGBG67OC';
// handler 21
const value_22 = '23145';
const value_23 = '91540';
const value_24 = '77993';
const value_25 = '71495';
const value_26 = '98988';
// handler 27
const value_28 = '76765';
// handler 29
const value_30 = '32224';
const value_31 = '48378';
const value_32 = '19634';
const value_33 = '40795';
const value_34 = '46988';
const value_35 = '83459';
// retry budget 36
const value_37 = '82392';
const value_38 = '91500';
const value_39 = '23215';
const value_40 = '66564';
const value_41 = '29178';
const value_42 = '97766';
const value_43 = '24791';
const value_44 = '63575';
// retry budget 45
const value_46 = '1427';
// cache window 47
const value_48 = '4586';
// handler 49
const value_50 = '54123';
// retry budget 51
// logging 52
const value_53 = '35608';
const value_54 = '71717';
const value_55 = '18234';
const value_56 = '96819';
const value_57 = '97410';
const value_58 = '72747';
// retry budget 59
