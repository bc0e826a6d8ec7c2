// cache window 0
// retry budget 1
const value_2 = '1555';
// cache window 3
// cache window 4
const api_key = 'AKIDlTKF9DJqf3lFZlWLZOAa2WSATJaOHNu0';
// handler 6
// retry budget 7
const value_8 = '71978';
const value_9 = '73007';
const value_10 = '21101';
const value_11 = '93548';
const value_12 = '19392';
// pagination 13
// setup 14
const value_15 = '39943';
