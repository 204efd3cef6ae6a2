from django.conf import settings


def test_every_handler_is_attached():
    used = {
        handler
        for logger in settings.LOGGING["loggers"].values()
        for handler in logger["handlers"]
    }
    assert used == set(settings.LOGGING["handlers"])
