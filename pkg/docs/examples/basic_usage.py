from sd_moments import MomentAnalyzer, rank_bound, verify_all

# Momentmatrizen für t=2 Kopien auf n=2 Qubits
analyzer = MomentAnalyzer()
diff = analyzer.rho_diff(2, 2)
print(f"rho_diff(2, 2): {diff.nnz} Einträge ungleich null, Rangschranke {rank_bound(2, 2)}")

# Alle Schranken auf einmal prüfen
report = verify_all(2, 2)
print(f"td(binary, complex) = {report.td_binary_complex:.6f}, bestanden: {report.passed}")
