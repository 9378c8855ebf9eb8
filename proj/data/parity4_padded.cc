# 4-wire, 4-gate parity variant with the result on wire 3
ccv1
vars 2
wires x1 x2 ~x1 ~x2
gate 1 4
gate 3 2
gate 1 3
gate 1 2
output 3
