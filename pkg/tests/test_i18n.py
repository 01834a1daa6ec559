import pytest

from softguess.i18n import get_available_languages, get_language, set_language, tr
from softguess.i18n.translations import TRANSLATIONS


@pytest.fixture(autouse=True)
def english():
    set_language("en")
    yield
    set_language("en")


def _keys(node, prefix=""):
    for key, value in node.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _keys(value, path + ".")
        else:
            yield path


class TestCatalogue:

    def test_languages(self):
        assert set(get_available_languages()) == set(TRANSLATIONS) == {"en", "pt_BR"}

    @pytest.mark.parametrize("lang", sorted(TRANSLATIONS))
    def test_same_keys_everywhere(self, lang):
        assert set(_keys(TRANSLATIONS[lang])) == set(_keys(TRANSLATIONS["en"]))

    def test_lookup(self):
        assert tr("report.field.moment") == "Minimal moment"

    def test_switch(self):
        assert set_language("pt_BR")
        assert get_language() == "pt_BR"
        assert tr("report.field.moment") == "Momento mínimo"

    def test_unknown_language_is_ignored(self):
        assert not set_language("xx")
        assert get_language() == "en"

    def test_missing_key(self):
        assert tr("report.field.nothing") == "report.field.nothing"

    def test_format(self):
        assert tr("error.usage", message="bad D") == "Invalid input: bad D"

    def test_format_mismatch(self):
        assert tr("error.usage", other=1) == "Invalid input: {message}"
