/* A tokenizer for arithmetic expressions and a recursive evaluator. */

struct Lexer {
    char *src;
    int pos;
    int kind;
    int value;
};

int lex_is_digit(int c) {
    return c >= '0' && c <= '9';
}

void lex_skip_space(struct Lexer *lx) {
    while (*(lx->src + lx->pos) == ' ') {
        lx->pos = lx->pos + 1;
    }
}

void lex_next(struct Lexer *lx) {
    int c;
    lex_skip_space(lx);
    c = *(lx->src + lx->pos);
    if (c == 0) {
        lx->kind = 0;
        return;
    }
    if (lex_is_digit(c)) {
        lx->value = 0;
        while (lex_is_digit(*(lx->src + lx->pos))) {
            lx->value = lx->value * 10 + *(lx->src + lx->pos) - '0';
            lx->pos = lx->pos + 1;
        }
        lx->kind = 'n';
        return;
    }
    lx->kind = c;
    lx->pos = lx->pos + 1;
}

int parse_expr(struct Lexer *lx);

int parse_atom(struct Lexer *lx) {
    int v;
    if (lx->kind == 'n') {
        v = lx->value;
        lex_next(lx);
        return v;
    }
    if (lx->kind == '(') {
        lex_next(lx);
        v = parse_expr(lx);
        if (lx->kind == ')') {
            lex_next(lx);
        }
        return v;
    }
    if (lx->kind == '-') {
        lex_next(lx);
        return -parse_atom(lx);
    }
    return 0;
}

int parse_term(struct Lexer *lx) {
    int v = parse_atom(lx);
    int rhs;
    while (lx->kind == '*' || lx->kind == '/') {
        if (lx->kind == '*') {
            lex_next(lx);
            v = v * parse_atom(lx);
        } else {
            lex_next(lx);
            rhs = parse_atom(lx);
            v = rhs == 0 ? 0 : v / rhs;
        }
    }
    return v;
}

int parse_expr(struct Lexer *lx) {
    int v = parse_term(lx);
    while (lx->kind == '+' || lx->kind == '-') {
        if (lx->kind == '+') {
            lex_next(lx);
            v = v + parse_term(lx);
        } else {
            lex_next(lx);
            v = v - parse_term(lx);
        }
    }
    return v;
}

int evaluate(char *text) {
    struct Lexer lx;
    lx.src = text;
    lx.pos = 0;
    lx.kind = 0;
    lx.value = 0;
    lex_next(&lx);
    return parse_expr(&lx);
}

int count_tokens(char *text) {
    struct Lexer lx;
    int n = 0;
    lx.src = text;
    lx.pos = 0;
    lex_next(&lx);
    while (lx.kind != 0) {
        n = n + 1;
        lex_next(&lx);
    }
    return n;
}
