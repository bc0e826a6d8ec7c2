// setup 0
export const credential = "https://hooks.slack.com/services/J//j6qvj+FJ85OWe9fH2nhq2YWpEfZh7/2M+CRpUgOAtn";
// handler 2
export const value_3 = "50753";
// retry budget 4
export const value_5 = "86745";
export const value_6 = "1524";
