from phasedesign.circuits import build_gbin_circuit, circuit_from_truth_table, dump_ht, simulate_ht

# f(x) = x0 AND x1 als Wahrheitstabelle, Bit i von x ist Draht i
circuit = build_gbin_circuit(circuit_from_truth_table([0, 0, 0, 1]))
print(dump_ht(circuit))

state = simulate_ht(circuit)
print(state.amplitudes.real)  # [0.5, 0.5, 0.5, -0.5]
