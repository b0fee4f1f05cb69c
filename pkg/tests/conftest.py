from hypothesis import settings

# exhaustive integer checks can be slow on cold caches; wall-clock deadlines
# only add flakiness here
settings.register_profile("default", deadline=None)
settings.load_profile("default")
