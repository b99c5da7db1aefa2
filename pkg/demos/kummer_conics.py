"""Seed a Kummer surface from a point and cut 32 conics on a nearby smooth member."""

from heisquartic import kummer

seed = kummer.build_seed((1, 2, 3, 4))
print("parameter:", [str(c) for c in seed.param])
print("nodes per trope:", {len(seed.nodes_on(t)) for t in range(16)})
print("tropes per node:", {len(seed.tropes_through(n)) for n in range(16)})

seed, sl = kummer.conic_slice()
print(f"slice at t = {sl.t}, u = {[str(c) for c in sl.u]}")
print(f"extension height: {sl.tower.height}, conics: {len(sl.conics)}")
for name, ok in kummer.verify_slice(sl).items():
    print(f"  {name}: {ok}")

u = (1, 2, 3, 5, 7, -18)
counts, total, rank = kummer.mukai_rank(u)
print(f"fixed points per element on u={u}: {sorted(set(counts.values()))}, invariant rank {rank}")
