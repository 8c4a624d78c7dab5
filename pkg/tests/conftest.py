from hypothesis import HealthCheck, settings

settings.register_profile(
    "superq",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("superq")
