# %% [markdown]
# # Local L- and epsilon-factors
#
# Parameters are direct sums of characters (and, over R, induced
# two-dimensional summands).  Their L-factors are exact Gamma products.

# %%
from lconverse import Parameter, chi, epsilon_factor, eval_numeric, expr_equal, gr, l_factor, lam, phi

t = gr("1/3", 1)
p = Parameter.complex(chi(2, t), chi(-1, 0))
print("parameter:", p)
print("L-factor:", l_factor(p))
print("epsilon:", epsilon_factor(p))

# %% [markdown]
# The reducible summand phi_{0,t} splits as lam_{0,t} + lam_{1,t+1}.  The
# complex-style Gamma_C(s+t) and the product of two real Gamma factors
# agree by the duplication formula, and the canonical forms coincide.

# %%
raw = l_factor(Parameter.real(phi(0, t)))
split = l_factor(Parameter.real(lam(0, t), lam(1, t + 1)))
print("phi_{0,t}:", raw)
print("equal as canonical forms:", expr_equal(raw, split))
s0 = 0.75 + 0.4j
print("numeric check at", s0, ":", eval_numeric(raw, s0), eval_numeric(split, s0))
