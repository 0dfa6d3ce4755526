"""Record byte-exact service responses as frontend test fixtures.

Run from the repository root:  python3 scripts/generate_frontend_fixtures.py
"""

from __future__ import annotations

import pathlib

from fastapi.testclient import TestClient

from quiverlab.service import create_app

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    def save(name: str, response) -> None:
        assert response.status_code == 200, (name, response.status_code)
        (FIXTURES / name).write_bytes(response.content)
        print(f"wrote {FIXTURES / name}")

    seed = client.get("/api/seed/a3-linear")
    save("seed-a3-linear.json", seed)
    quiver = seed.json()["quiver"]

    mutated = client.post("/api/mutate", json={"quiver": quiver, "vertex": 1})
    save("mutate-a3-vertex1.json", mutated)
    cycle = mutated.json()["quiver"]

    save("mutate-cycle3-vertex1.json",
         client.post("/api/mutate", json={"quiver": cycle, "vertex": 1}))
    save("search-cycle3.json",
         client.post("/api/search/acyclic", json={"quiver": cycle}))
    save("seed-kronecker3.json", client.get("/api/seed/kronecker3"))
    save("seed-a5-preprojective.json", client.get("/api/seed/a5-preprojective"))


if __name__ == "__main__":
    main()
