"""Request/response models shared by the HTTP service and the CLI client."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ConfigOverrides(BaseModel):
    """Subset of config a request may override; None keeps the server default."""
    analyzer_order: list[str] | None = None
    paper_compat: bool | None = None
    tau_act: float | None = None
    tau_obj: float | None = None
    emotion_threshold: float | None = None

    def to_overrides(self) -> dict:
        return {k: v for k, v in self.model_dump().items() if v is not None}


class BlockModel(BaseModel):
    kind: str
    text: str
    indent: int
    start_line: int
    end_line: int
    scene_index: int
    resolved_text: str | None = None

    def model_dump(self, **kwargs):  # omit the optional field unless requested
        data = super().model_dump(**kwargs)
        if data.get("resolved_text") is None:
            data.pop("resolved_text", None)
        return data


class SegmentRequest(BaseModel):
    text: str
    resolved: bool = False
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class SegmentResponse(BaseModel):
    blocks: list[BlockModel]
    unclassified_ratio: float


class SimplifyRequest(BaseModel):
    parses: str = Field(description="interchange-format parse file content")
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class SimplifiedModel(BaseModel):
    source_sentence_index: int
    text: str
    temporal_id: int


class SimplifyResponse(BaseModel):
    sentences: list[SimplifiedModel]


class FrameModel(BaseModel):
    verb_index: int
    roles: dict[str, tuple[int, int]] = Field(default_factory=dict)


class SentenceFramesModel(BaseModel):
    text: str
    frames: list[FrameModel] = Field(default_factory=list)


class ExtractRequest(BaseModel):
    parses: str
    frames: list[SentenceFramesModel] = Field(default_factory=list)
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class ActionRecordModel(BaseModel):
    owner: str
    target: str
    prop: str
    action: str
    origin_action: str
    manner: str
    modifier_location: str
    modifier_direction: str
    start_time: float
    duration: int
    speed: float
    translation: bool
    rotation: bool
    emotion: str | None
    partial_start_time: int


class WarningModel(BaseModel):
    code: str
    sentence_index: int
    detail: str = ""


class ExtractResponse(BaseModel):
    records: list[ActionRecordModel]
    warnings: list[WarningModel]


class StoryboardRequest(BaseModel):
    script: str
    parses: str
    manifest: dict
    frames: list[SentenceFramesModel] = Field(default_factory=list)
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class SceneModel(BaseModel):
    scene_index: int
    heading_text: str
    actions: list[ActionRecordModel]


class StoryboardResponse(BaseModel):
    schema_version: int
    provenance: dict
    scenes: list[SceneModel]
    warnings: list[WarningModel]


class EvalRequest(BaseModel):
    hypotheses: list[str]
    references: list[list[str]] = Field(description="one reference set per annotator")
    sources: list[str] | None = None
    max_n: int = 4
    smoothing: bool = False
    arf_system: list[dict] = Field(default_factory=list)
    arf_gold: list[dict] = Field(default_factory=list)


class PrfModel(BaseModel):
    precision: float
    recall: float
    f1: float


class EvalResponse(BaseModel):
    bleu: float
    sari: float | None = None
    per_field_bleu1: dict[str, float] = Field(default_factory=dict)
    boolean_field_prf: dict[str, PrfModel] = Field(default_factory=dict)


class StatsRequest(BaseModel):
    text: str
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class StatsResponse(BaseModel):
    descriptions: int
    sentences: int
    descriptions_with_action: int
    action_sentences: int
    mean_sentence_length: float
    unclassified_ratio: float


class VersionResponse(BaseModel):
    tool_version: str
    schema_version: int
