# %% [markdown]
# # Where GL(1) twists are not enough
#
# phi_{-1,t} and phi_{-5,t} have the same L- and epsilon-factors under
# every GL(1) twist; a GL(2) twist tells them apart.

# %%
from lconverse import Parameter, distinguish, gr, phi, verify_gl2_counterexample, verify_gl4_counterexample

t = gr("2/3", -1)
print(verify_gl2_counterexample(1, 5, t).to_dict())
w = distinguish(Parameter.real(phi(1, t)), Parameter.real(phi(5, t)))
print("separating twist:", w.twist)
print("  left: ", w.left)
print("  right:", w.right)

# %% [markdown]
# In dimension four even the central character does not help.

# %%
report = verify_gl4_counterexample(1, 3, 2, 2, gr(0), gr(1))
print(report.to_dict())
