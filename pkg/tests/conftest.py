from hypothesis import settings

# Reductions of 16-term lists are slow enough to trip the default per-example deadline on CI.
settings.register_profile("lqf", deadline=None, max_examples=200)
settings.load_profile("lqf")
