# %% [markdown]
# # Recovering a parameter from twisted L-factors
#
# An oracle hides a parameter and only answers twisted L-factor queries.
# The reconstruction reads pole multisets off the answers.

# %%
from lconverse import Parameter, ParameterOracle, chi, gr, lam, phi, reconstruct

hidden = Parameter.complex(chi(1, gr("1/2")), chi(4, gr("1/2")), chi(-2, gr(1, 1)))
oracle = ParameterOracle(hidden, bound=4, n_max=3)
found = reconstruct(oracle)
print("recovered:", found, "after", oracle.query_count, "queries")
assert found == hidden

# %% [markdown]
# Over R the characters' parities are recovered too, even when shifts collide.

# %%
hidden = Parameter.real(lam(0, gr(1)), lam(1, gr(1)), phi(3, gr(1)))
oracle = ParameterOracle(hidden, bound=3, n_max=4)
found = reconstruct(oracle)
print("recovered:", found)
for twist, answer in oracle.transcript:
    print(f"  {twist}: {answer}")
assert found == hidden
