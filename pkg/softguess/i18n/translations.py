"""
Translation strings for all supported languages.

To add a new language:
1. Add an entry to LANGUAGES dict with code and display name
2. Add a new dict in TRANSLATIONS with the same structure as 'en'
3. Translate all strings

JSON keys and CSV headers stay in English; only help texts, text-format
labels and log messages are looked up here.
"""

# Available languages with their display names
LANGUAGES = {
    "en": "English",
    "pt_BR": "Português (Brasil)",
}

# =============================================================================
# ENGLISH (Default)
# =============================================================================
EN = {
    "app": {
        "description": "Soft guessing under log-loss with errors allowed: smooth Renyi "
                       "entropies, optimal strategies, lossy codes and their asymptotics.",
    },

    "command": {
        "entropy": "Renyi, smooth Renyi and conditional entropies of a source",
        "moment": "Minimal guessing moment, optimal strategy and bounds",
        "code": "Optimal variable-length lossy code and its cumulant",
        "figure": "Cumulant bounds over a grid of rho for a reference case",
        "asymptotics": "Block-length table of exact values against the expansion",
        "selftest": "Run the built-in property checks",
    },

    "help": {
        "config": "JSON file with numerical settings",
        "log_file": "Write a DEBUG log to this file",
        "verbose": "More console output (-v info, -vv debug)",
        "lang": "Language of help and text output",
        "pmf": "Source: kind:args (dyadic:4, uniform:3, random:10:7, bernoulli:0.2) or a file",
        "joint": "Joint pmf P(y, x) as a JSON or CSV matrix, rows indexed by y",
        "alpha": "Entropy order in (0, 1]",
        "eps": "Allowed error probability in [0, 1)",
        "rho": "Moment order rho > 0",
        "D": "Distortion level D >= 0 (list size floor(2^D))",
        "L": "List size, same as --D log2(L)",
        "n": "Block length n or range lo:hi",
        "seed": "Seed for random sources",
        "grid": "rho grid lo:hi:count",
        "format": "Output format",
        "out": "Output file (stdout when omitted)",
        "oracle": "Also run the brute-force reference",
        "emit_strings": "Include the codeword strings",
        "quick": "Reduced selftest",
        "kind": "Quantity expanded by asymptotics",
        "case": "Reference case for figure",
        "atol": "Sum-to-one tolerance for input pmfs",
        "budget": "Largest block alphabet to build",
    },

    "report": {
        "title": {
            "entropy": "Entropies (bits)",
            "moment": "Guessing moment",
            "code": "Variable-length lossy code",
            "figure": "Cumulant bounds",
            "asymptotics": "Asymptotic expansion",
            "selftest": "Selftest",
        },
        "column": {
            "rho": "rho",
            "new_upper": "new upper",
            "old_upper": "old upper",
            "lambda_exact": "Lambda*",
            "n": "n",
            "exact_per_symbol": "exact/n",
            "predicted": "predicted",
            "residual": "residual",
        },
        "field": {
            "renyi": "Renyi entropy",
            "smooth_renyi": "Smooth Renyi entropy",
            "shannon": "Shannon entropy",
            "varentropy": "Varentropy",
            "third_moment": "Third absolute moment",
            "arimoto_renyi": "Arimoto conditional entropy",
            "renner_wolf_zero": "Renner-Wolf conditional entropy",
            "kuzuoka_smooth": "Conditional smooth entropy",
            "eps_y": "Error allocation per y",
            "conditional_shannon": "Conditional Shannon entropy",
            "conditional_varentropy": "Conditional varentropy",
            "moment": "Minimal moment",
            "exact": "Exact value",
            "error_prob": "Error probability",
            "z_upper": "List-index upper bound",
            "z_lower": "List-index lower bound",
            "explicit_upper": "Explicit upper bound",
            "explicit_lower": "Explicit lower bound",
            "lambda_star": "Optimal cumulant",
            "strict_lower": "Strict lower bound",
            "upper": "Upper bound",
            "expected_length": "Expected length",
            "max_length": "Maximum length",
            "excess_distortion_prob": "Excess distortion probability",
            "passed": "Passed",
            "properties": "Properties",
            "failed": "First failure",
        },
    },

    "error": {
        "usage": "Invalid input: {message}",
        "budget": "Resource budget exceeded: {message}",
        "property": "Property check failed: {message}",
        "io": "File error: {message}",
        "selftest": "Selftest failed at {name}",
        "two_sources": "Give either --pmf or --joint, not both",
        "no_source": "This command needs --pmf or --joint",
        "no_case": "figure needs --case (one of {cases})",
        "pmf_only": "{command} works on --pmf sources only",
        "oracle_joint": "--oracle works on --pmf sources only",
        "kind": "Unknown --kind; expected one of {kinds}",
        "csv_unsupported": "{command} has no tabular output; use json or text",
    },
}

# =============================================================================
# PORTUGUESE (Brazil)
# =============================================================================
PT_BR = {
    "app": {
        "description": "Adivinhação suave sob perda logarítmica com erros permitidos: "
                       "entropias de Renyi suavizadas, estratégias ótimas, códigos com "
                       "perdas e suas assintóticas.",
    },

    "command": {
        "entropy": "Entropias de Renyi, suavizadas e condicionais de uma fonte",
        "moment": "Momento mínimo de adivinhação, estratégia ótima e limitantes",
        "code": "Código de comprimento variável ótimo e seu cumulante",
        "figure": "Limitantes do cumulante numa grade de rho para um caso de referência",
        "asymptotics": "Tabela por comprimento de bloco: valores exatos contra a expansão",
        "selftest": "Executa as verificações de propriedades embutidas",
    },

    "help": {
        "config": "Arquivo JSON com parâmetros numéricos",
        "log_file": "Grava um log DEBUG neste arquivo",
        "verbose": "Mais saída no console (-v info, -vv debug)",
        "lang": "Idioma da ajuda e da saída em texto",
        "pmf": "Fonte: tipo:args (dyadic:4, uniform:3, random:10:7, bernoulli:0.2) ou arquivo",
        "joint": "Pmf conjunta P(y, x) como matriz JSON ou CSV, linhas indexadas por y",
        "alpha": "Ordem da entropia em (0, 1]",
        "eps": "Probabilidade de erro permitida em [0, 1)",
        "rho": "Ordem do momento rho > 0",
        "D": "Nível de distorção D >= 0 (tamanho de lista floor(2^D))",
        "L": "Tamanho de lista, igual a --D log2(L)",
        "n": "Comprimento de bloco n ou intervalo lo:hi",
        "seed": "Semente das fontes aleatórias",
        "grid": "Grade de rho lo:hi:count",
        "format": "Formato de saída",
        "out": "Arquivo de saída (stdout se omitido)",
        "oracle": "Executa também a referência por força bruta",
        "emit_strings": "Inclui as palavras-código",
        "quick": "Selftest reduzido",
        "kind": "Grandeza expandida em asymptotics",
        "case": "Caso de referência para figure",
        "atol": "Tolerância da soma das pmfs de entrada",
        "budget": "Maior alfabeto de bloco a construir",
    },

    "report": {
        "title": {
            "entropy": "Entropias (bits)",
            "moment": "Momento de adivinhação",
            "code": "Código de comprimento variável com perdas",
            "figure": "Limitantes do cumulante",
            "asymptotics": "Expansão assintótica",
            "selftest": "Selftest",
        },
        "column": {
            "rho": "rho",
            "new_upper": "limitante novo",
            "old_upper": "limitante antigo",
            "lambda_exact": "Lambda*",
            "n": "n",
            "exact_per_symbol": "exato/n",
            "predicted": "previsto",
            "residual": "resíduo",
        },
        "field": {
            "renyi": "Entropia de Renyi",
            "smooth_renyi": "Entropia de Renyi suavizada",
            "shannon": "Entropia de Shannon",
            "varentropy": "Varentropia",
            "third_moment": "Terceiro momento absoluto",
            "arimoto_renyi": "Entropia condicional de Arimoto",
            "renner_wolf_zero": "Entropia condicional de Renner-Wolf",
            "kuzuoka_smooth": "Entropia condicional suavizada",
            "eps_y": "Alocação de erro por y",
            "conditional_shannon": "Entropia condicional de Shannon",
            "conditional_varentropy": "Varentropia condicional",
            "moment": "Momento mínimo",
            "exact": "Valor exato",
            "error_prob": "Probabilidade de erro",
            "z_upper": "Limitante superior pelo índice de lista",
            "z_lower": "Limitante inferior pelo índice de lista",
            "explicit_upper": "Limitante superior explícito",
            "explicit_lower": "Limitante inferior explícito",
            "lambda_star": "Cumulante ótimo",
            "strict_lower": "Limitante inferior estrito",
            "upper": "Limitante superior",
            "expected_length": "Comprimento esperado",
            "max_length": "Comprimento máximo",
            "excess_distortion_prob": "Probabilidade de excesso de distorção",
            "passed": "Aprovado",
            "properties": "Propriedades",
            "failed": "Primeira falha",
        },
    },

    "error": {
        "usage": "Entrada inválida: {message}",
        "budget": "Limite de recursos excedido: {message}",
        "property": "Verificação de propriedade falhou: {message}",
        "io": "Erro de arquivo: {message}",
        "selftest": "Selftest falhou em {name}",
        "two_sources": "Informe --pmf ou --joint, não ambos",
        "no_source": "Este comando precisa de --pmf ou --joint",
        "no_case": "figure precisa de --case (um de {cases})",
        "pmf_only": "{command} só aceita fontes --pmf",
        "oracle_joint": "--oracle só aceita fontes --pmf",
        "kind": "--kind desconhecido; esperado um de {kinds}",
        "csv_unsupported": "{command} não tem saída tabular; use json ou text",
    },
}

# Combined translations dict
TRANSLATIONS = {
    "en": EN,
    "pt_BR": PT_BR,
}
