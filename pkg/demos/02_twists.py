# %% [markdown]
# # Twists and Rankin-Selberg products

# %%
from lconverse import Parameter, gr, lam, phi, rankin_selberg_l, tensor
from lconverse.gamma_calculus import gamma_c_factor, expr_equal

t, u = gr("1/2"), gr(0, 1)

# %% [markdown]
# Tensoring two induced summands gives two induced summands; when both
# conductors agree, one of them degenerates and splits into characters.

# %%
print(tensor(Parameter.real(phi(3, t)), Parameter.real(phi(1, u))))
print(tensor(Parameter.real(phi(2, t)), Parameter.real(phi(2, u))))

# %% [markdown]
# The GL(2) x GL(2) L-factor is Gamma_C(s+t+u) Gamma_C(s+t+u-min(N, M)).

# %%
for N, M in [(3, 1), (2, 5), (4, 4)]:
    L = rankin_selberg_l(Parameter.real(phi(N, t)), Parameter.real(phi(M, u)))
    closed = gamma_c_factor(t + u) * gamma_c_factor(t + u - min(N, M))
    print(N, M, expr_equal(L, closed), L)

# %%
L = rankin_selberg_l(Parameter.real(phi(3, t)), Parameter.real(lam(1, u)))
print("GL(2) x GL(1):", L)
