import pytest

from chatisa.errors import (
    ContextOverflowError,
    NotFoundError,
    UpstreamError,
    ValidationError,
)
from chatisa.gateway import (
    ChatRequest,
    Gateway,
    Message,
    MockAdapter,
    MockRule,
    MockScript,
    ModelRegistry,
    default_adapters,
    estimate_tokens,
)

from conftest import mock_config_dict, write_config


@pytest.fixture()
def registry(tmp_path) -> ModelRegistry:
    return ModelRegistry.load(write_config(tmp_path / "m.json", mock_config_dict()))


def _gateway(registry, script=None, **kwargs):
    adapter = MockAdapter(script or MockScript(
        default=MockRule(content="OK", input_tokens=12, output_tokens=3)
    ))
    return Gateway(registry, {"mock": adapter}, backoff_base=0.0, **kwargs), adapter


def _request(model_id="mock-frontier", text="hi", temperature=0.0):
    return ChatRequest(model_id, (Message("system", "sys"), Message("user", text)),
                       temperature)


def test_mock_model_scripted_reply(registry):
    gateway, _ = _gateway(registry)
    response = gateway.complete(_request())
    assert response.content == "OK"
    assert response.usage_estimated is False
    assert response.model_id == "mock-frontier"


def test_adapter_receives_exactly_the_request_messages(registry):
    gateway, adapter = _gateway(registry)
    messages = (
        Message("system", "sys"),
        Message("user", "one"),
        Message("assistant", "two"),
        Message("user", "three"),
    )
    gateway.complete(ChatRequest("mock-frontier", messages, 0.25))
    assert adapter.calls[-1].messages == messages
    assert adapter.calls[-1].temperature == 0.25


def test_two_consecutive_user_messages_is_a_validation_error():
    with pytest.raises(ValidationError, match="alternate"):
        ChatRequest(
            "mock-frontier",
            (Message("system", "s"), Message("user", "a"), Message("user", "b")),
            0.0,
        )


def test_request_must_end_with_user_message():
    with pytest.raises(ValidationError):
        ChatRequest(
            "mock-frontier",
            (Message("system", "s"), Message("user", "a"), Message("assistant", "b")),
            0.0,
        )


def test_missing_system_prompt_rejected():
    with pytest.raises(ValidationError):
        ChatRequest("mock-frontier", (Message("user", "a"),), 0.0)


def test_temperature_out_of_range_rejected():
    with pytest.raises(ValidationError):
        _request(temperature=1.5)


def test_unknown_model_is_not_found(registry):
    gateway, _ = _gateway(registry)
    with pytest.raises(NotFoundError):
        gateway.complete(_request(model_id="gpt-99"))


def test_history_over_context_window_raises_overflow_naming_limit(registry):
    # Oracle: the estimator itself. mock-light window = 2048 tokens.
    gateway, _ = _gateway(registry)
    spec = registry.resolve("mock-light")
    text = "x" * (4 * (spec.context_window + 10))
    assert estimate_tokens(text) > spec.context_window
    with pytest.raises(ContextOverflowError) as err:
        gateway.complete(_request(model_id="mock-light", text=text))
    assert err.value.details["limit"] == spec.context_window
    assert str(spec.context_window) in err.value.message


def test_payload_at_window_boundary_passes(registry):
    gateway, _ = _gateway(registry)
    spec = registry.resolve("mock-light")
    # system "sys" is 1 token; fill the rest exactly to the window
    text = "x" * (4 * (spec.context_window - 1))
    response = gateway.complete(_request(model_id="mock-light", text=text))
    assert response.content == "OK"


def test_usage_estimated_when_script_omits_counts(registry):
    script = MockScript(default=MockRule(content="no usage here"))
    gateway, _ = _gateway(registry, script)
    response = gateway.complete(_request(text="abcdefgh"))
    assert response.usage_estimated is True
    assert response.input_tokens == estimate_tokens("sys") + estimate_tokens("abcdefgh")
    assert response.output_tokens == estimate_tokens("no usage here")


def test_transient_failures_retry_then_succeed(registry):
    script = MockScript(default=MockRule(content="OK", fail_times=2,
                                         input_tokens=1, output_tokens=1))
    gateway, adapter = _gateway(registry)
    gateway.adapters["mock"] = adapter = MockAdapter(script)
    response = gateway.complete(_request())
    assert response.content == "OK"
    assert adapter.attempts == 3  # 1 call + 2 retries


def test_retry_count_is_bounded(registry):
    script = MockScript(default=MockRule(fail_always=True))
    adapter = MockAdapter(script)
    gateway = Gateway(registry, {"mock": adapter}, max_retries=2, backoff_base=0.0)
    with pytest.raises(UpstreamError):
        gateway.complete(_request())
    assert adapter.attempts == 3  # never more than 1 + max_retries


def test_upstream_error_names_provider_and_alternates(registry):
    script = MockScript(default=MockRule(fail_always=True))
    adapter = MockAdapter(script)
    gateway = Gateway(registry, {"mock": adapter}, max_retries=0, backoff_base=0.0)
    with pytest.raises(UpstreamError) as err:
        gateway.complete(_request())
    details = err.value.details
    assert details["provider"] == "mock"
    assert details["model_id"] == "mock-frontier"
    # same-tier alternates only, no silent failover
    assert "mock-light" not in details["alternate_models"]
    assert "gpt-4o" in details["alternate_models"]


def test_every_seed_model_resolves_to_exactly_one_adapter(seed_registry):
    adapters = default_adapters()
    for spec in seed_registry.list_models():
        assert spec.provider in adapters
        assert sum(1 for name in adapters if name == spec.provider) == 1


def test_missing_api_key_is_a_configuration_error(seed_registry, monkeypatch):
    from chatisa.errors import ConfigurationError
    monkeypatch.delenv("PROVIDER_OPENAI_API_KEY", raising=False)
    gateway = Gateway(seed_registry, max_retries=0)
    with pytest.raises(ConfigurationError, match="PROVIDER_OPENAI_API_KEY"):
        gateway.complete(_request(model_id="gpt-4o"))
