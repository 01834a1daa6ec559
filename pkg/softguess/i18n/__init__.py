"""
Message catalogue for the softguess command line.

Usage:
    from .i18n import tr, set_language

    tr("report.field.moment")     # "Minimal moment"
    set_language("pt_BR")
    tr("error.usage", message="...")

Machine-readable output (JSON keys, CSV headers) is never translated.
"""

from typing import Any, Dict, Optional

from .translations import LANGUAGES, TRANSLATIONS

_DEFAULT = "en"
_current_language = _DEFAULT


def set_language(lang_code: str) -> bool:
    """
    Switch the active language.

    Returns:
        True if the language exists, False otherwise (nothing changes)
    """
    global _current_language
    if lang_code in TRANSLATIONS:
        _current_language = lang_code
        return True
    return False


def get_language() -> str:
    return _current_language


def get_available_languages() -> Dict[str, str]:
    """{code: display name} of every catalogue."""
    return dict(LANGUAGES)


def _lookup(catalogue: Dict[str, Any], key: str) -> Optional[str]:
    node: Any = catalogue
    for part in key.split("."):
        if not isinstance(node, dict):
            return None
        node = node.get(part)
    return node if isinstance(node, str) else None


def tr(key: str, **kwargs) -> str:
    """
    Translated string for a dotted key.

    Missing keys fall back to English, then to the key itself. Format
    arguments that do not fit the template are ignored.
    """
    text = _lookup(TRANSLATIONS.get(_current_language, TRANSLATIONS[_DEFAULT]), key)
    if text is None and _current_language != _DEFAULT:
        text = _lookup(TRANSLATIONS[_DEFAULT], key)
    if text is None:
        return key
    if kwargs:
        try:
            return text.format(**kwargs)
        except (KeyError, ValueError):
            return text
    return text


__all__ = ["tr", "set_language", "get_language", "get_available_languages", "LANGUAGES"]
