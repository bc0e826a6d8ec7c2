const value_0 = '45529';
const value_1 = '95367';
const client_secret = 'LTAIgnCMvD20OnwTtJzsgqQG';
const value_3 = '80569';
