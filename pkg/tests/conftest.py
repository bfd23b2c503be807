import hypothesis

hypothesis.settings.register_profile(
    "symprod",
    deadline=None,  # vectorized first calls pay one-off warmup costs
    max_examples=100,
    print_blob=True,
)
hypothesis.settings.load_profile("symprod")
