"""Exception types shared across the taletorium pipeline."""


class TaletoriumError(Exception):
    """Base class for all taletorium errors."""


# --- story engine ---

class NoKeywords(TaletoriumError):
    """Text yielded no candidate keywords after stopword removal."""


class NoCharacters(TaletoriumError):
    """No noun-headed keyword was available to build a cast from."""


class ModelMissing(TaletoriumError):
    """A planner operation was called with an untrained model."""


class TemplatesMissing(TaletoriumError):
    """The sentence template bank is empty or unreadable."""


class EmptyCorpus(TaletoriumError):
    """The training corpus directory contains no story files."""


# --- parsing / styling ---

class PaletteMissing(TaletoriumError):
    """assign_style was called with an empty color palette."""


# --- coreference / graph updates ---

class UnknownEntity(TaletoriumError):
    """A graph update referenced an entity id that does not exist."""


# --- concept mapping ---

class EmbeddingUnavailable(TaletoriumError):
    """No word of the input text is covered by the embedding provider."""


class VocabMissing(TaletoriumError):
    """The canonical vocabulary is empty."""


# --- rendering ---

class TemplateBankError(TaletoriumError):
    """The stroke-template bank file is unreadable or empty."""


class MissingTemplate(TaletoriumError):
    """No stroke template could be resolved for a category."""


class DegenerateBox(TaletoriumError):
    """A layout box with zero area cannot be rendered."""


# --- sketch recognition ---

class DegenerateSketch(TaletoriumError):
    """All sketch points coincide; the stroke set cannot be normalized."""


# --- sessions ---

class StoryFinished(TaletoriumError):
    """The story already has its full number of fragments."""


class SessionNotFound(TaletoriumError):
    """No live session with the requested id."""
