from hypothesis import HealthCheck, settings

# Big-integer cases can be slow on a cold cache; wall-clock deadlines only
# add flakiness for exact-arithmetic properties.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
