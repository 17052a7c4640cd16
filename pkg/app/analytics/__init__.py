# Verification sweeps over small symmetric groups and triangle lattices
