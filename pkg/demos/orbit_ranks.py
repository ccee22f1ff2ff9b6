# coding: utf-8

# # Rank of the odd bracket form on nilpotent orbits
#
# Pick a Lie superalgebra, evaluate its odd-odd bracket matrix at a
# nilpotent orbit point, and compare the rank with the closed form.

# In[1]:

from superorbits import AlgebraSpec, OrbitLabel, build_algebra, evaluate_form, form_matrix, k_formula, orbit_representative
from superorbits import exact

# The smallest interesting case is gl(1|1). Its two odd basis vectors bracket
# to the identity.

# In[2]:

alg = build_algebra(AlgebraSpec.gl(1, 1))
fm = form_matrix(alg)
print(fm.symbolic(0, 1))

# Evaluating at an even element turns each bracket into a number.

# In[3]:

x = alg.element([[1, 0], [0, 1]])
print(evaluate_form(alg, x))

# # A nilpotent orbit in gl(4|3)

# In[4]:

spec = AlgebraSpec.gl(4, 3)
label = OrbitLabel.pair("gl", "3,1", "2,1")
x = orbit_representative(spec, label)
print(x.matrix)

# In[5]:

k = exact.rank(evaluate_form(build_algebra(spec), x))
print("rank at the orbit point:", k)
print("closed form:", k_formula(label))

# # Orthosymplectic case with two tags
#
# The very even partition 2^2 labels two orbits in so(4). Both give the same rank.

# In[6]:

spec = AlgebraSpec.osp(4, 2)
for tag in ("I", "II"):
    lab = OrbitLabel.pair("osp", "2^2", "2", tag=tag)
    y = orbit_representative(spec, lab)
    print(tag, y.preserves_forms(), exact.rank(evaluate_form(build_algebra(y.spec), y)))
