"""HTTP boundary: pydantic request/response models, handler functions
shared with the command line, and the FastAPI application in
``flagbundles.service.app``."""
