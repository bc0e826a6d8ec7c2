// pagination 0
const access = '272069315415-m0t0pmasb2v5p1f03syq587ui4kkro9r.apps.googleusercontent.com';
// cache window 2
const value_3 = '57425';
const value_4 = '53086';
