/* Ring buffer of bytes addressed through a base pointer. */

struct Ring {
    char *data;
    int capacity;
    int head;
    int tail;
    int used;
};

int ring_init(struct Ring *r, int capacity) {
    r->data = malloc(capacity);
    if (r->data == NULL) {
        return 0;
    }
    r->capacity = capacity;
    r->head = 0;
    r->tail = 0;
    r->used = 0;
    return 1;
}

int ring_full(struct Ring *r) {
    return r->used == r->capacity;
}

int ring_empty(struct Ring *r) {
    return r->used == 0;
}

int ring_put(struct Ring *r, int c) {
    if (ring_full(r)) {
        return 0;
    }
    *(r->data + r->tail) = c;
    r->tail = (r->tail + 1) % r->capacity;
    r->used = r->used + 1;
    return 1;
}

int ring_get(struct Ring *r) {
    int c;
    if (ring_empty(r)) {
        return -1;
    }
    c = *(r->data + r->head);
    r->head = (r->head + 1) % r->capacity;
    r->used = r->used - 1;
    return c;
}

int ring_write(struct Ring *r, char *text) {
    int written = 0;
    while (*text != 0 && ring_put(r, *text)) {
        written = written + 1;
        text = text + 1;
    }
    return written;
}

int ring_read(struct Ring *r, char *out, int limit) {
    int n = 0;
    int c;
    while (n < limit) {
        c = ring_get(r);
        if (c < 0) {
            break;
        }
        *(out + n) = c;
        n = n + 1;
    }
    *(out + n) = 0;
    return n;
}

int ring_checksum(struct Ring *r) {
    int sum = 0;
    int i = r->head;
    int seen = 0;
    while (seen < r->used) {
        sum = (sum * 31 + *(r->data + i)) % 65521;
        i = (i + 1) % r->capacity;
        seen = seen + 1;
    }
    return sum;
}

void ring_release(struct Ring *r) {
    free(r->data);
    r->data = NULL;
    r->capacity = 0;
    r->used = 0;
}
