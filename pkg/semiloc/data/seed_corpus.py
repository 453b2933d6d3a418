# semiloc/data/seed_corpus.py

from pathlib import Path

from semiloc.cli.commands.gen import build_channel_file
from semiloc.cli.deps import load_channel_file, write_channel_file
from semiloc.services.corpus_service import NAMED_EXAMPLES

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

# Entradas do corpus de referência
# Formato: (arquivo, tipo)
default_corpus = [(f"{name}.json", f"named:{name}") for name in NAMED_EXAMPLES]


def run_corpus_seed(target: Path = GOLDEN_DIR):
    for filename, kind in default_corpus:
        path = target / filename
        schema = build_channel_file(kind)
        try:
            if path.exists() and load_channel_file(path).dump_line() == schema.dump_line():
                print(f"🟡 Arquivo '{filename}' já atualizado")
                continue
        except Exception as e:
            print(f"🔄 Arquivo '{filename}' ilegível, regravando: {e}")
        write_channel_file(schema, path)
        print(f"🟢 Arquivo '{filename}' gravado ({kind})")
    print("✅ Seed do corpus concluído com sucesso")


if __name__ == "__main__":
    run_corpus_seed()
