// Service document shapes (schema v1). The client never re-derives any of
// these values locally; it displays what the service said, byte for byte.

export interface QuiverJson {
  vertices: string[];
  arrows: [number, number, number][];
}

export interface QuiverDoc {
  schema: string;
  quiver: QuiverJson;
  admissible: boolean;
  acyclic: boolean;
}

export interface SearchDoc {
  schema: string;
  found: boolean;
  witness_word: number[] | null;
  truncated: boolean;
  class_size: number;
  verdict: string;
  limits: { max_depth: number; max_nodes: number };
}

export interface ErrorDoc {
  schema: string;
  error: string;
}
