/* Fixed-capacity stack built from a chain of cells. */

struct Cell {
    int item;
    struct Cell *below;
};

struct Stack {
    struct Cell *top;
    int size;
    int capacity;
};

void stack_init(struct Stack *s, int capacity) {
    s->top = NULL;
    s->size = 0;
    s->capacity = capacity;
}

int stack_empty(struct Stack *s) {
    return s->size == 0;
}

int stack_full(struct Stack *s) {
    return s->size >= s->capacity;
}

int stack_push(struct Stack *s, int item) {
    struct Cell *c;
    if (stack_full(s)) {
        return 0;
    }
    c = malloc(16);
    if (!c) {
        return 0;
    }
    c->item = item;
    c->below = s->top;
    s->top = c;
    s->size = s->size + 1;
    return 1;
}

int stack_pop(struct Stack *s, int *out) {
    struct Cell *c = s->top;
    if (c == NULL) {
        return 0;
    }
    *out = c->item;
    s->top = c->below;
    s->size = s->size - 1;
    free(c);
    return 1;
}

int stack_peek(struct Stack *s) {
    if (s->top == NULL) {
        return -1;
    }
    return s->top->item;
}

int balanced(char *text) {
    struct Stack s;
    int depth = 0;
    int ok = 1;
    int dummy = 0;
    char *p = text;
    stack_init(&s, 64);
    while (*p != 0 && ok) {
        if (*p == '(') {
            ok = stack_push(&s, 1);
            depth = depth + 1;
        } else if (*p == ')') {
            ok = stack_pop(&s, &dummy);
            depth = depth - 1;
        }
        p = p + 1;
    }
    if (!stack_empty(&s)) {
        ok = 0;
    }
    while (stack_pop(&s, &dummy)) {
        depth = depth - 1;
    }
    return ok;
}

int eval_rpn_digits(char *expr) {
    struct Stack s;
    int a = 0;
    int b = 0;
    char *p = expr;
    stack_init(&s, 32);
    for (; *p != 0; p = p + 1) {
        if (*p >= '0' && *p <= '9') {
            stack_push(&s, *p - '0');
            continue;
        }
        if (!stack_pop(&s, &b) || !stack_pop(&s, &a)) {
            return -1;
        }
        if (*p == '+') {
            stack_push(&s, a + b);
        } else if (*p == '-') {
            stack_push(&s, a - b);
        } else if (*p == '*') {
            stack_push(&s, a * b);
        } else {
            stack_push(&s, b != 0 ? a / b : 0);
        }
    }
    return stack_peek(&s);
}
