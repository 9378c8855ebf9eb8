# 4-wire parity witness: (x1 or x2) and (~x1 or ~x2) on wire 2
ccv1
vars 2
wires x1 x2 ~x1 ~x2
gate 1 2
gate 3 4
gate 2 4
output 2
