"""MCP Protocol implementation for the jspec server."""

from typing import Any, Dict

from .config import config
from .schemas import dump_json
from .utils.errors import JSpecError, ValidationError

_OBJECT = {"type": "string", "description": "Object of 𝒥 as \"m,n\""}
_WINDOW = {"type": "string", "description": "Window \"M,N\"; the configured default when omitted"}
_MORPHISM = {
    "description": "Morphism key such as \"1,1>2,2:1/2/2\", or {src, dst, phi, psi, alpha}",
    "oneOf": [{"type": "string"}, {"type": "object"}],
}
_DOCUMENT = {"type": "object", "description": "A versioned JSON document (jfunctor.v1, tdatum.v1, symseq.v1)"}

# MCP Tool Definitions
TOOLS = {
    "count_hom": {
        "name": "count_hom",
        "description": "Count the morphisms (m,n) -> (k,l) of 𝒥 in closed form",
        "inputSchema": {
            "type": "object",
            "properties": {"src": _OBJECT, "dst": _OBJECT},
            "required": ["src", "dst"]
        }
    },
    "enumerate_hom": {
        "name": "enumerate_hom",
        "description": "List every morphism (m,n) -> (k,l) of 𝒥 in canonical order",
        "inputSchema": {
            "type": "object",
            "properties": {"src": _OBJECT, "dst": _OBJECT},
            "required": ["src", "dst"]
        }
    },
    "compose": {
        "name": "compose",
        "description": "Compose two morphisms of 𝒥, g after f",
        "inputSchema": {
            "type": "object",
            "properties": {"g": _MORPHISM, "f": _MORPHISM},
            "required": ["g", "f"]
        }
    },
    "decompose": {
        "name": "decompose",
        "description": "Factor a morphism as a permutation pair after a standard map",
        "inputSchema": {
            "type": "object",
            "properties": {"morphism": _MORPHISM},
            "required": ["morphism"]
        }
    },
    "check_category": {
        "name": "check_category",
        "description": "Exhaustively check category axioms, hom counts and the decomposition on a window",
        "inputSchema": {
            "type": "object",
            "properties": {
                "window": _WINDOW,
                "bound": {"type": "integer", "description": "Largest entry for hom counts", "default": 4}
            },
            "required": []
        }
    },
    "check_functor": {
        "name": "check_functor",
        "description": "Check functoriality of a jfunctor.v1 document on its whole window",
        "inputSchema": {
            "type": "object",
            "properties": {"document": _DOCUMENT},
            "required": ["document"]
        }
    },
    "check_tdatum": {
        "name": "check_tdatum",
        "description": "Check shift equivariance and Σ_p-invariance of a tdatum.v1 document",
        "inputSchema": {
            "type": "object",
            "properties": {"document": _DOCUMENT},
            "required": ["document"]
        }
    },
    "convert": {
        "name": "convert",
        "description": "Convert a T-datum to a 𝒥-functor or back",
        "inputSchema": {
            "type": "object",
            "properties": {
                "document": _DOCUMENT,
                "to": {"type": "string", "enum": ["functor", "tdatum"]}
            },
            "required": ["document", "to"]
        }
    },
    "check_roundtrip": {
        "name": "check_roundtrip",
        "description": "Convert there and back and compare with the input",
        "inputSchema": {
            "type": "object",
            "properties": {"document": _DOCUMENT},
            "required": ["document"]
        }
    },
    "convolve": {
        "name": "convolve",
        "description": "Day convolution (X⊛Y)(k,l) as a finite coend presentation",
        "inputSchema": {
            "type": "object",
            "properties": {
                "left": _DOCUMENT,
                "right": _DOCUMENT,
                "at": _OBJECT,
                "classes": {"type": "boolean", "description": "Include class members", "default": False}
            },
            "required": ["left", "right", "at"]
        }
    },
    "check_monoidal": {
        "name": "check_monoidal",
        "description": "Unit, braiding and Sym(T)-module comparison for two functors, or the monoidal laws of a window",
        "inputSchema": {
            "type": "object",
            "properties": {"left": _DOCUMENT, "right": _DOCUMENT, "window": _WINDOW},
            "required": []
        }
    },
    "prolong": {
        "name": "prolong",
        "description": "Apply the prolongation f^K to a T-datum (spectrum) or a symmetric sequence (orbit set)",
        "inputSchema": {
            "type": "object",
            "properties": {
                "document": _DOCUMENT,
                "K": {"description": "The finite set K", "oneOf": [{"type": "string"}, {"type": "array"}]}
            },
            "required": ["document", "K"]
        }
    },
    "check_spectrum": {
        "name": "check_spectrum",
        "description": "Check equivariance of the iterated bondings of a spectrum.v1 document",
        "inputSchema": {
            "type": "object",
            "properties": {
                "document": {"type": "object", "description": "A spectrum.v1 document"},
                "p_max": {"type": "integer", "description": "Largest iterate checked"}
            },
            "required": ["document"]
        }
    },
    "pi0": {
        "name": "pi0",
        "description": "Connected components of a window of 𝒥, classified by n − m",
        "inputSchema": {
            "type": "object",
            "properties": {
                "window": _WINDOW,
                "dot": {"type": "boolean", "description": "Include a DOT rendering", "default": False}
            },
            "required": []
        }
    },
    "random_tdatum": {
        "name": "random_tdatum",
        "description": "A seeded random valid T-datum",
        "inputSchema": {
            "type": "object",
            "properties": {
                "seed": {"type": "integer", "description": "Random seed; JSPEC_SEED when omitted"},
                "window": _WINDOW
            },
            "required": []
        }
    }
}

# MCP Resource Definitions
RESOURCES = {
    "jspec:category:window": {
        "uri": "jspec:category:window",
        "name": "Truncated 𝒥",
        "description": "Objects, hom counts and DOT graph of the default window",
        "mimeType": "application/json"
    },
    "jspec:pi0": {
        "uri": "jspec:pi0",
        "name": "Components of 𝒥",
        "description": "Connected components of the default window",
        "mimeType": "application/json"
    },
    "jspec:config": {
        "uri": "jspec:config",
        "name": "Verification settings",
        "description": "Seed, window and sample counts in effect",
        "mimeType": "application/json"
    }
}

CATEGORY_TOOL_NAMES = ["count_hom", "enumerate_hom", "compose", "decompose", "check_category"]
DIAGRAM_TOOL_NAMES = ["check_functor", "check_tdatum", "convert", "check_roundtrip", "random_tdatum"]
MONOIDAL_TOOL_NAMES = ["convolve", "check_monoidal"]
SPECTRA_TOOL_NAMES = ["prolong", "check_spectrum"]
TOPOLOGY_TOOL_NAMES = ["pi0"]


def _require(arguments: Dict[str, Any], name: str) -> Any:
    value = arguments.get(name)
    if value is None:
        raise ValidationError(f"Missing '{name}' parameter", name)
    return value


class MCPProtocol:
    """MCP Protocol implementation."""

    def __init__(self, category_tools, diagram_tools, monoidal_tools, spectra_tools, topology_tools):
        self.category_tools = category_tools
        self.diagram_tools = diagram_tools
        self.monoidal_tools = monoidal_tools
        self.spectra_tools = spectra_tools
        self.topology_tools = topology_tools

    async def initialize(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """Initialize the MCP server."""
        protocol_version = params.get("protocolVersion", "2024-11-05")

        return {
            "protocolVersion": protocol_version,
            "capabilities": {
                "tools": {},
                "resources": {}
            },
            "serverInfo": {
                "name": "jspec",
                "version": "1.0.0"
            }
        }

    async def list_tools(self) -> Dict[str, Any]:
        """List available tools."""
        groups = [
            (self.category_tools, CATEGORY_TOOL_NAMES),
            (self.diagram_tools, DIAGRAM_TOOL_NAMES),
            (self.monoidal_tools, MONOIDAL_TOOL_NAMES),
            (self.spectra_tools, SPECTRA_TOOL_NAMES),
            (self.topology_tools, TOPOLOGY_TOOL_NAMES),
        ]
        tools_list = []
        for tools, names in groups:
            if tools:
                tools_list.extend(TOOLS[name] for name in names)
        return {"tools": tools_list}

    async def call_tool(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """Execute a tool call."""
        tool_name = params.get("name")
        arguments = params.get("arguments") or {}

        if not tool_name:
            raise ValidationError("Missing tool name", "name")

        if tool_name not in TOOLS:
            raise ValidationError(f"Unknown tool: {tool_name}", "name")

        if not isinstance(arguments, dict):
            raise ValidationError("Tool arguments must be an object", "arguments")

        try:
            # Category tools
            if tool_name in CATEGORY_TOOL_NAMES and not self.category_tools:
                raise ValidationError("Category tools not available")
            if tool_name == "count_hom":
                result = await self.category_tools.count_hom(_require(arguments, "src"), _require(arguments, "dst"))

            elif tool_name == "enumerate_hom":
                result = await self.category_tools.enumerate_hom(_require(arguments, "src"), _require(arguments, "dst"))

            elif tool_name == "compose":
                result = await self.category_tools.compose(_require(arguments, "g"), _require(arguments, "f"))

            elif tool_name == "decompose":
                result = await self.category_tools.decompose(_require(arguments, "morphism"))

            elif tool_name == "check_category":
                result = await self.category_tools.check_category(arguments.get("window"), arguments.get("bound", 4))

            # Diagram tools
            elif tool_name in DIAGRAM_TOOL_NAMES and not self.diagram_tools:
                raise ValidationError("Diagram tools not available")

            elif tool_name == "check_functor":
                result = await self.diagram_tools.check_functor(_require(arguments, "document"))

            elif tool_name == "check_tdatum":
                result = await self.diagram_tools.check_tdatum(_require(arguments, "document"))

            elif tool_name == "convert":
                result = await self.diagram_tools.convert(_require(arguments, "document"), _require(arguments, "to"))

            elif tool_name == "check_roundtrip":
                result = await self.diagram_tools.check_roundtrip(_require(arguments, "document"))

            elif tool_name == "random_tdatum":
                result = await self.diagram_tools.random_tdatum(arguments.get("seed"), arguments.get("window"))

            # Monoidal tools
            elif tool_name in MONOIDAL_TOOL_NAMES and not self.monoidal_tools:
                raise ValidationError("Monoidal tools not available")

            elif tool_name == "convolve":
                result = await self.monoidal_tools.convolve(
                    _require(arguments, "left"),
                    _require(arguments, "right"),
                    _require(arguments, "at"),
                    arguments.get("classes", False),
                )

            elif tool_name == "check_monoidal":
                result = await self.monoidal_tools.check_monoidal(
                    arguments.get("left"), arguments.get("right"), arguments.get("window")
                )

            # Spectra tools
            elif tool_name in SPECTRA_TOOL_NAMES and not self.spectra_tools:
                raise ValidationError("Spectra tools not available")

            elif tool_name == "prolong":
                result = await self.spectra_tools.prolong(_require(arguments, "document"), _require(arguments, "K"))

            elif tool_name == "check_spectrum":
                result = await self.spectra_tools.check_spectrum(_require(arguments, "document"), arguments.get("p_max"))

            # Topology tools
            elif tool_name == "pi0":
                if not self.topology_tools:
                    raise ValidationError("Topology tools not available")
                result = await self.topology_tools.pi0(arguments.get("window"), arguments.get("dot", False))

            else:
                raise ValidationError(f"Tool '{tool_name}' not implemented")

            return {"content": result}

        except Exception as e:
            if isinstance(e, JSpecError):
                raise e
            else:
                raise ValidationError(f"Error executing tool '{tool_name}': {str(e)}")

    async def list_resources(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """List available resources."""
        resources_list = []

        if self.category_tools:
            resources_list.append(RESOURCES["jspec:category:window"])

        if self.topology_tools:
            resources_list.append(RESOURCES["jspec:pi0"])

        resources_list.append(RESOURCES["jspec:config"])

        return {"resources": resources_list}

    async def read_resource(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """Read resource content."""
        uri = params.get("uri")

        if not uri:
            raise ValidationError("Missing resource URI", "uri")

        if uri not in RESOURCES:
            raise ValidationError(f"Unknown resource: {uri}", "uri")

        try:
            if uri == "jspec:category:window":
                if not self.category_tools:
                    raise ValidationError("Category tools not available")
                content = await self.category_tools.describe_window()

            elif uri == "jspec:pi0":
                if not self.topology_tools:
                    raise ValidationError("Topology tools not available")
                content = await self.topology_tools.pi0()

            elif uri == "jspec:config":
                content = config.dict()

            else:
                raise ValidationError(f"Resource '{uri}' not implemented")

            return {
                "contents": [{
                    "uri": uri,
                    "mimeType": RESOURCES[uri]["mimeType"],
                    "text": dump_json(content)
                }]
            }

        except Exception as e:
            if isinstance(e, JSpecError):
                raise e
            else:
                raise ValidationError(f"Error reading resource '{uri}': {str(e)}")
