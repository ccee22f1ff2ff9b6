# coding: utf-8

# # Good and bad parabolics in gl(4|3)
#
# A degree map on the natural basis defines a parabolic. It is good when the
# odd part of g/p is as small as the orbit rank allows.

# In[1]:

from superorbits import AlgebraSpec, check_dim_identity, find_good_parabolic, induced_numerics
from superorbits.parabolic import goodness_checks, parabolic_from_degrees, richardson_orbit
from superorbits.partitions import Partition

# In[2]:

spec = AlgebraSpec.gl(4, 3)
bad = parabolic_from_degrees(spec, (1, 1, 2, 3, 1, 2, 2))
print(bad.levi_text(), richardson_orbit(bad))
print(goodness_checks(bad))
print(induced_numerics(bad).as_dict())

# Moving index 6 down to level one fixes it.

# In[3]:

good = parabolic_from_degrees(spec, (1, 1, 2, 3, 1, 1, 2))
print(good.levi_text(), goodness_checks(good))
print(induced_numerics(good).as_dict())

# The same parabolic can be found from the orbit directly.

# In[4]:

found = find_good_parabolic(Partition.of(3, 1), Partition.of(2, 1))
print(found.degrees, found.levi_text())

# # Splitting the exterior algebra into Levi modules
#
# The summand dimensions add up to 2^c1.

# In[5]:

rep = check_dim_identity(good)
for lam, dim in zip(rep.highest_weights, rep.dims):
    print(lam, dim)
print(rep.total, "=", 2**good.c1)
