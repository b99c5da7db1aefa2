"""Walk through the Heisenberg group acting on P^3: elements, fix lines, planes."""

from collections import Counter

from heisquartic import family, heisgroup

mats, _, _ = heisgroup.enumerate_group()
print(f"group order: {len(mats)}")

labels = heisgroup.nonzero_labels()
print(f"{len(labels)} nonzero labels, each with two fix lines -> {len(heisgroup.all_fix_lines())} lines")

g, h = labels[0], labels[5]
print(f"<{heisgroup.label_name(g)}, {heisgroup.label_name(h)}> = {heisgroup.symplectic_form(g, h)}")

iso, noniso = heisgroup.classify_planes()
print(f"planes: {len(iso)} isotropic, {len(noniso)} not")

plane = iso[0]
faces, vertices = heisgroup.tetrahedron_of(plane)
print(f"tetrahedron of the first isotropic plane: {len(faces)} faces, {len(vertices)} vertices")
print(f"  its product of faces sits at u = {[str(c) for c in family.tetrahedron_parameter(plane)]}")

pairs = heisgroup.orthogonal_pairs()
nodes = Counter(family.quadric_parameter(p) for p in pairs)
print(f"{len(pairs)} orthogonal pairs give {len(nodes)} distinct Segre nodes")
